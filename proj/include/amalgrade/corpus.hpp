#pragma once

#include <string>
#include <vector>

namespace amalgrade {

struct CorpusEntry {
    std::string name;
    std::string text;
};

// Instances compiled into the library (from corpus/*.amg), sorted by name.
const std::vector<CorpusEntry>& corpus_entries();

} // namespace amalgrade
