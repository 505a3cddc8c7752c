#include "artin/linform.hpp"

#include <cctype>

namespace artin {

LinForm LinForm::parse(const std::string& text) {
    LinForm out;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == text.size()) throw std::invalid_argument("empty linear form");
    bool first = true;
    while (i < text.size()) {
        skip_ws();
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' in linear form: " + text);
        }
        skip_ws();
        std::string digits;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            digits += text[i++];
        if (i < text.size() && text[i] == '*') ++i;
        skip_ws();
        if (i < text.size() && text[i] == 'x') {
            ++i;
            std::string idx;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                idx += text[i++];
            if (idx.empty()) throw std::invalid_argument("missing variable index: " + text);
            Int coeff = digits.empty() ? Int(1) : Int(digits);
            out += LinForm::var(std::stoi(idx), sign * coeff);
        } else {
            if (digits.empty())
                throw std::invalid_argument("dangling sign in linear form: " + text);
            out += LinForm(sign * Int(digits));
        }
        first = false;
        skip_ws();
    }
    return out;
}

}  // namespace artin
