#include "legendrian/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace legendrian {

const std::vector<CorpusEntry>& bundled_corpus() {
    static const std::vector<CorpusEntry> corpus = {
        {"unknot", "L1 R1", "standard Legendrian unknot, tb = -1"},
        {"unknot_r1", "L1 L1 X2 R1 R1", "unknot after a Reidemeister-style wiggle; same knot"},
        {"trefoil", "L1 L1 X2 X2 X2 R1 R1", "right trefoil at maximal tb = 1"},
        {"trefoil_stab", "L1 L1 X2 X2 X2 R1 L1 R2 R1", "stabilized right trefoil, tb = 0"},
        {"chekanov_a", "L1 L2 X2 X2 X2 X3 X1 X3 X1 R2 R1", "first front of the Chekanov pair"},
        {"chekanov_b", "L1 L2 X2 X2 X3 X1 X3 X1 X2 R2 R1", "second front of the Chekanov pair"},
        {"stab_unknot", "L1 X1 R1", "once-stabilized unknot, rot = 1"},
    };
    return corpus;
}

std::vector<CorpusEntry> corpus_entries() {
    const char* dir = std::getenv("LEGENDRIAN_CORPUS_DIR");
    if (!dir || !*dir) return bundled_corpus();
    std::vector<CorpusEntry> out;
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.path().extension() == ".front") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
        std::ifstream in(f);
        std::stringstream ss;
        ss << in.rdbuf();
        out.push_back({f.stem().string(), ss.str(), "from " + f.string()});
    }
    return out;
}

FrontDiagram corpus_front(const std::string& name) {
    for (const auto& e : corpus_entries())
        if (e.name == name) return parse_front(e.word);
    throw Error(Err::UsageError, "no corpus entry named " + name);
}

}  // namespace legendrian
