#pragma once

#include <cstdio>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>

namespace opinion::csv {

// RFC 4180: quote a field iff it contains a comma, quote, or newline.
inline std::string escape(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos)
        return std::string(field);
    std::string out;
    out.reserve(field.size() + 2);
    out.push_back('"');
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

inline std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

inline std::string num(long long v) { return std::to_string(v); }
inline std::string num(int v) { return std::to_string(v); }

class Writer {
public:
    explicit Writer(std::ostream& out) : out_(out) {}

    void row(std::initializer_list<std::string> fields) {
        bool first = true;
        for (const auto& f : fields) {
            if (!first) out_ << ',';
            out_ << escape(f);
            first = false;
        }
        out_ << "\r\n";
    }

private:
    std::ostream& out_;
};

}  // namespace opinion::csv
