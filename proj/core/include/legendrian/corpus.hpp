#pragma once

// Bundled example fronts. LEGENDRIAN_CORPUS_DIR overrides with *.front files.

#include <string>
#include <vector>

#include "legendrian/front.hpp"

namespace legendrian {

struct CorpusEntry {
    std::string name;
    std::string word;
    std::string note;
};

const std::vector<CorpusEntry>& bundled_corpus();

// bundled entries, or *.front files from the override directory when the
// environment variable is set
std::vector<CorpusEntry> corpus_entries();

FrontDiagram corpus_front(const std::string& name);

}  // namespace legendrian
