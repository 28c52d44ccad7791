#pragma once

#include <string>

namespace pcc {

// Detected by header token: "pcc", "comm", "graph", "bf", "bcp", or JSON.
std::string detect_format(const std::string& text);

// Lossless conversion between equivalent formats; "json" wraps any input,
// "dot" renders graphs. Unsupported pairs raise InvalidArgument, malformed
// input raises ParseError with a line number.
std::string convert(const std::string& input, const std::string& target);

}  // namespace pcc
