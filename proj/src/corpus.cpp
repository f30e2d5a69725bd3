#include "gdcalc/corpus.hpp"

namespace gdcalc {

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = {
        {"unknot", "unknot.gauss",
         "link \"unknot\"\n"
         "classical: true\n"
         "circle:\n"},
        {"two-component-unlink", "unlink2.gauss",
         "link \"two-component-unlink\"\n"
         "classical: true\n"
         "circle:\n"
         "circle:\n"},
        {"kink-plus", "kink-plus.gauss",
         "link \"kink-plus\"\n"
         "classical: true\n"
         "circle: O1+ U1+\n"},
        {"kink-minus", "kink-minus.gauss",
         "link \"kink-minus\"\n"
         "classical: true\n"
         "circle: U1- O1-\n"},
        {"hopf-plus", "hopf.gauss",
         "link \"hopf-plus\"\n"
         "classical: true\n"
         "circle: O1+ U2+\n"
         "circle: U1+ O2+\n"},
        {"trefoil", "trefoil.gauss",
         "link \"trefoil\"\n"
         "classical: true\n"
         "circle: O1+ U2+ O3+ U1+ O2+ U3+\n"},
        {"figure-eight", "figure-eight.gauss",
         "link \"figure-eight\"\n"
         "classical: true\n"
         "circle: O1+ U2- O3- U1+ O4+ U3- O2- U4+\n"},
        {"chain-three", "chain-three.gauss",
         "link \"chain-three\"\n"
         "classical: true\n"
         "circle: O1+ U2+\n"
         "circle: U1+ O2+ O3+ U4+\n"
         "circle: U3+ O4+\n"},
        {"h2", "h2.gauss",
         "link \"h2\"\n"
         "classical: true\n"
         "circle: U1+ O2+ U3+ O4+\n"
         "circle: O1+ U4+ O3+ U2+\n"},
        {"virtual-trefoil", "virtual-trefoil.gauss",
         "link \"virtual-trefoil\"\n"
         "classical: false\n"
         "circle: U1+ O2+ O1+ U2+\n"},
        {"virtual-hopf", "virtual-hopf.gauss",
         "link \"virtual-hopf\"\n"
         "classical: false\n"
         "circle: U1+\n"
         "circle: O1+\n"},
        {"kishino", "kishino.gauss",
         "link \"kishino\"\n"
         "classical: false\n"
         "circle: U1+ O2- U3+ O4- O3+ U4- O1+ U2-\n"},
        {"kishino-hat", "kishino-hat.gauss",
         "link \"kishino-hat\"\n"
         "classical: false\n"
         "circle: O1+ U2- O3+ U4- U3+ O4- U1+ O2-\n"},
        {"mirror-k", "mirror-k.gauss",
         "link \"mirror-k\"\n"
         "classical: false\n"
         "circle: U1+ O2+ O1+ U2+\n"},
        {"mirror-kstar", "mirror-kstar.gauss",
         "link \"mirror-kstar\"\n"
         "classical: false\n"
         "circle: O1- U2- U1- O2-\n"},
        {"base-pair-a", "base-pair-a.gauss",
         "link \"base-pair-a\"\n"
         "classical: false\n"
         "circle: O1+ U2+ U3+ O4+ O3+ U4+ U1+ O2+\n"},
        {"base-pair-b", "base-pair-b.gauss",
         "link \"base-pair-b\"\n"
         "classical: false\n"
         "circle: U1+ O2+ O1+ U2+ U3+ O4+ O3+ U4+\n"},
        {"virt-pair-a", "virt-pair-a.gauss",
         "link \"virt-pair-a\"\n"
         "classical: false\n"
         "circle: U1+ O2- U3- O1+ U2- O3-\n"},
        {"virt-pair-b", "virt-pair-b.gauss",
         "link \"virt-pair-b\"\n"
         "classical: false\n"
         "circle: U1+ U2- U3- O1+ O2- O3-\n"},
    };
    return entries;
}

const CorpusEntry& corpus_entry(const std::string& name) {
    for (const CorpusEntry& e : corpus())
        if (e.name == name) return e;
    throw PreconditionError("no corpus entry named '" + name + "'");
}

Diagram corpus_diagram(const std::string& name) {
    return parse(corpus_entry(name).text);
}

std::vector<Diagram> corpus_diagrams() {
    std::vector<Diagram> out;
    out.reserve(corpus().size());
    for (const CorpusEntry& e : corpus()) out.push_back(parse(e.text));
    return out;
}

std::vector<std::string> classical_corpus_names() {
    std::vector<std::string> out;
    for (const CorpusEntry& e : corpus())
        if (parse(e.text).classical) out.push_back(e.name);
    return out;
}

}  // namespace gdcalc
