#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace entrobox {

/// Shortest round-trip decimal form (deterministic across runs).
std::string format_double(double v);

/// RFC-4180-quoted table builder with leading '#' provenance comments.
class CsvWriter {
public:
    void comment(const std::string& text);
    void row(const std::vector<std::string>& fields);
    const std::string& str() const { return buf_; }

private:
    std::string buf_;
};

} // namespace entrobox
