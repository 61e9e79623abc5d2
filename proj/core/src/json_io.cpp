#include "legendrian/json_io.hpp"

#include <nlohmann/json.hpp>

namespace legendrian {

using nlohmann::json;

json front_to_json(const FrontDiagram& d) {
    json j;
    j["events"] = json::array();
    for (const auto& ev : d.events()) {
        char c = ev.kind == EventKind::LeftCusp ? 'L' : (ev.kind == EventKind::RightCusp ? 'R' : 'X');
        j["events"].push_back(std::string(1, c) + std::to_string(ev.position));
    }
    if (d.num_events())
        j["basepoint"] = json::array({d.basepoint().gap, d.basepoint().strand});
    else
        j["basepoint"] = nullptr;
    return j;
}

FrontDiagram front_from_json(const json& j) {
    std::string word;
    for (const auto& ev : j.at("events")) {
        if (!word.empty()) word += ' ';
        word += ev.get<std::string>();
    }
    if (j.contains("basepoint") && !j.at("basepoint").is_null()) {
        auto bp = j.at("basepoint");
        word += " B" + std::to_string(bp.at(0).get<int>()) + "," + std::to_string(bp.at(1).get<int>());
    }
    return parse_front(word);
}

FrontDiagram front_from_text(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return front_from_json(json::parse(text));
    return parse_front(text);
}

json dga_to_json(const Dga& A) {
    json j;
    j["coeffs"] = A.coeffs() == Coeffs::F2 ? "F2" : "F2t";
    j["modulus"] = A.grading_modulus();
    j["generators"] = json::array();
    for (const auto& g : A.generators()) j["generators"].push_back({{"label", g.label}, {"grading", g.grading}});
    json diff = json::object();
    for (int g = 0; g < A.num_generators(); ++g) {
        json terms = json::array();
        for (const auto& t : A.differential(g).terms()) {
            std::string word;
            for (int x : t.word) {
                if (!word.empty()) word += ' ';
                word += A.generator(x).label;
            }
            terms.push_back(json::array({t.t_exp, word}));
        }
        diff[A.generator(g).label] = terms;
    }
    j["differential"] = diff;
    return j;
}

Dga dga_from_json(const json& j) {
    Coeffs coeffs = j.at("coeffs").get<std::string>() == "F2t" ? Coeffs::F2t : Coeffs::F2;
    int modulus = j.value("modulus", 0);
    std::vector<Generator> gens;
    for (const auto& g : j.at("generators"))
        gens.push_back({g.at("label").get<std::string>(), g.at("grading").get<int>()});
    Dga A(coeffs, modulus, j.value("t_degree", 0), gens);
    if (j.contains("differential"))
        for (auto& [label, terms] : j.at("differential").items()) {
            DgaElement e;
            for (const auto& t : terms) {
                Term term;
                term.t_exp = t.at(0).get<int>();
                std::istringstream in(t.at(1).get<std::string>());
                std::string w;
                while (in >> w) term.word.push_back(A.index_of(w));
                e.toggle(term);
            }
            A.set_differential(A.index_of(label), e);
        }
    return A;
}

json disks_to_json(const LagrangianDiagram& d, const DiskSet& disks) {
    json j = json::array();
    for (int g = 0; g < d.num_crossings(); ++g) {
        json per = json::object();
        per["generator"] = d.crossings()[g].label;
        per["disks"] = json::array();
        for (const auto& disk : disks.disks[g]) {
            json jd;
            jd["positive_quadrant"] = std::string(1, "NWSE"[static_cast<int>(disk.pos_quadrant)]);
            std::string word;
            for (int c : disk.neg_corners) {
                if (!word.empty()) word += ' ';
                word += d.crossings()[c].label;
            }
            jd["word"] = word;
            jd["t_exponent"] = disk.t_exponent;
            json bw = json::array();
            for (const auto& st : disk.boundary)
                bw.push_back({{"arc", st.arc},
                              {"corner", st.corner_crossing < 0 ? "" : d.crossings()[st.corner_crossing].label}});
            jd["boundary"] = bw;
            json mult = json::object();
            for (auto [r, m] : disk.region_mult) mult[std::to_string(r)] = m;
            jd["region_multiplicities"] = mult;
            per["disks"].push_back(jd);
        }
        j.push_back(per);
    }
    return j;
}

json trees_to_json(const std::vector<FlowTree>& trees) {
    json j = json::array();
    for (const auto& t : trees) {
        json jt;
        jt["dimension"] = t.dimension;
        std::string word;
        for (const auto& w : t.word) {
            if (!word.empty()) word += ' ';
            word += w;
        }
        jt["word"] = word;
        jt["vertices"] = json::array();
        for (const auto& v : t.vertices)
            jt["vertices"].push_back({{"kind", vertex_kind_name(v.kind)},
                                      {"chord", v.chord},
                                      {"event", v.event},
                                      {"gap", v.gap}});
        jt["edges"] = json::array();
        for (const auto& e : t.edges)
            jt["edges"].push_back(
                {{"upper", e.upper}, {"lower", e.lower}, {"gap_lo", e.gap_lo}, {"gap_hi", e.gap_hi}});
        j.push_back(jt);
    }
    return j;
}

}  // namespace legendrian
