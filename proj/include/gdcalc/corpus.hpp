#pragma once

#include <string>
#include <vector>

#include "gdcalc/diagram.hpp"

namespace gdcalc {

// A shipped example: the text is byte-identical to the corpus/<filename>
// data file, so the library works without any file access and the files
// stay honest.
struct CorpusEntry {
    std::string name;      // diagram name, also used by corpus_diagram()
    std::string filename;  // file under the corpus/ data directory
    std::string text;      // full file content
};

const std::vector<CorpusEntry>& corpus();

const CorpusEntry& corpus_entry(const std::string& name);

Diagram corpus_diagram(const std::string& name);

// All entries parsed, in corpus order.
std::vector<Diagram> corpus_diagrams();

// Names of the entries carrying the classical flag, in corpus order.
std::vector<std::string> classical_corpus_names();

}  // namespace gdcalc
