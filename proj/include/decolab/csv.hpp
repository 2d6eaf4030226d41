// csv.hpp — Deterministic CSV output.
//
// Numbers are printed with 12 significant digits through snprintf, so the
// same config always produces byte-identical files regardless of locale or
// stream state. Metadata lines start with '#'.

#pragma once

#include <fstream>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace decolab {

// Locale-independent "%.12g" rendering.
std::string format_number(double v);

class CsvWriter {
 public:
    explicit CsvWriter(const std::string& path);

    void comment(std::string_view text);
    void header(const std::vector<std::string>& columns);
    void row(std::initializer_list<double> values);

    const std::string& path() const { return path_; }

 private:
    std::string path_;
    std::ofstream out_;
};

}  // namespace decolab
