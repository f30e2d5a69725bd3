#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "doctest.h"
#include "gdcalc/corpus.hpp"
#include "gdcalc/diagram.hpp"
#include "helpers.hpp"

using namespace gdcalc;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "cannot open ", path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("embedded corpus matches the shipped data files byte for byte") {
    const std::string dir = testutil::env_or("GDCALC_CORPUS_DIR", "corpus");
    for (const CorpusEntry& e : corpus()) {
        CAPTURE(e.name);
        CHECK(slurp(dir + "/" + e.filename) == e.text);
    }
}

TEST_CASE("corpus entries parse to their own names") {
    CHECK(corpus().size() == 19);
    std::set<std::string> names;
    for (const CorpusEntry& e : corpus()) {
        CAPTURE(e.name);
        const Diagram d = parse(e.text);
        CHECK(d.name == e.name);
        CHECK(serialize(d) == e.text);
        names.insert(e.name);
    }
    CHECK(names.size() == corpus().size());
}

TEST_CASE("corpus lookup helpers") {
    CHECK(corpus_entry("trefoil").filename == "trefoil.gauss");
    CHECK_THROWS_AS(corpus_entry("nope"), PreconditionError);
    CHECK_THROWS_AS(corpus_diagram("nope"), PreconditionError);
    CHECK(corpus_diagrams().size() == 19);

    const auto classical = classical_corpus_names();
    CHECK(classical.size() == 9);
    for (const std::string& name : classical) {
        CAPTURE(name);
        CHECK(corpus_diagram(name).classical);
    }
    CHECK_FALSE(corpus_diagram("kishino").classical);
    CHECK_FALSE(corpus_diagram("virt-pair-a").classical);
}
