#include "sl2/path_text.hpp"

#include <sstream>
#include <stdexcept>

namespace sl2 {

namespace {

bool is_separator(char c) {
    return c == '.' || c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

[[noreturn]] void fail(const std::string& what, std::size_t pos) {
    std::ostringstream os;
    os << "path: " << what << " at position " << pos + 1;
    throw std::invalid_argument(os.str());
}

}  // namespace

Path parse_path(std::string_view text) {
    Path out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (is_separator(text[i])) {
            ++i;
            continue;
        }
        RowElement e;
        while (i < text.size() && !is_separator(text[i])) {
            const char c = text[i];
            if (c == '1') {
                if (e.twos > 0) fail("decreasing factor (letter 1 after 2)", i);
                e.ones += 1;
            } else if (c == '2') {
                e.twos += 1;
            } else {
                fail(std::string("illegal character '") + c + "'", i);
            }
            ++i;
        }
        out.push_back(e);
    }
    if (out.empty()) throw std::invalid_argument("path: no factors in input");
    return out;
}

std::string render_path(const Path& path) {
    std::string s;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i) s += '.';
        s += path[i].str();
    }
    return s;
}

}  // namespace sl2
