#include "mhopf/text.hpp"

#include <algorithm>
#include <cctype>

namespace mhopf {

std::string word_text(const Word& w) {
    const bool compact = std::all_of(w.begin(), w.end(), [](Letter x) { return x <= 9; });
    std::string out;
    if (compact) {
        for (Letter x : w) out += static_cast<char>('0' + x);
        return out;
    }
    out = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(w[i]);
    }
    return out + "]";
}

static std::vector<Letter> parse_list(const std::string& text, bool allow_zero) {
    std::vector<Letter> out;
    std::string body = text;
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') throw Error(ErrorCode::parse_error, "unterminated list: " + text);
        body = body.substr(1, body.size() - 2);
    }
    if (body.find(',') == std::string::npos && !(text.front() == '[')) {
        for (char ch : body) {
            if (ch == ' ') continue;
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw Error(ErrorCode::parse_error, "bad character in '" + text + "'");
            Letter x = static_cast<Letter>(ch - '0');
            if (x == 0 && !allow_zero) throw Error(ErrorCode::parse_error, "letter 0 in '" + text + "'");
            out.push_back(x);
        }
        return out;
    }
    std::size_t pos = 0;
    while (pos <= body.size()) {
        std::size_t next = body.find(',', pos);
        if (next == std::string::npos) next = body.size();
        std::string item = body.substr(pos, next - pos);
        item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
        if (item.empty()) {
            if (body.empty()) break;
            throw Error(ErrorCode::parse_error, "empty item in '" + text + "'");
        }
        if (!std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
            item.size() > 9)
            throw Error(ErrorCode::parse_error, "bad number '" + item + "' in '" + text + "'");
        Letter x = static_cast<Letter>(std::stoul(item));
        if (x == 0 && !allow_zero) throw Error(ErrorCode::parse_error, "letter 0 in '" + text + "'");
        out.push_back(x);
        pos = next + 1;
    }
    return out;
}

Word parse_word(const std::string& text) {
    if (text.empty() || text == "[]") return {};
    return Word(parse_list(text, false));
}

Word parse_code_word(const std::string& text) {
    if (text.empty() || text == "[]") return {};
    return Word(parse_list(text, true));
}

std::string composition_text(const Composition& c) {
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(c[i]);
    }
    return out;
}

Composition parse_composition(const std::string& text) {
    if (text.empty()) return {};
    return Composition(parse_list(text, false));
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

}  // namespace mhopf
