#include "hnpoly/parse.hpp"

#include <cctype>
#include <sstream>

namespace hnpoly {

namespace {

struct Cursor {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!eat(c)) throw ParseError(pos, std::string("expected ") + what);
    }

    Int integer() {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && text[pos] == '-') ++pos;
        size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits) throw ParseError(start, "expected an integer");
        return int_from_string(text.substr(start, pos - start));
    }
};

StableSummand term(Cursor& c) {
    c.skip_ws();
    size_t start = c.pos;
    if (!c.eat('O')) throw ParseError(start, "expected a summand 'O(...)'");
    Int num = 0, den = 1;
    if (c.eat('(')) {
        num = c.integer();
        if (c.eat('/')) {
            size_t den_pos = c.pos;
            den = c.integer();
            if (den == 0) throw ParseError(den_pos, "slope denominator must be nonzero");
            if (den < 0) throw ParseError(den_pos, "slope denominator must be positive");
        }
        c.expect(')', "')'");
    }
    Int mult = 1;
    if (c.eat('^')) {
        size_t mult_pos = c.pos;
        mult = c.integer();
        if (mult <= 0) throw ParseError(mult_pos, "multiplicity must be positive");
    }
    return {Slope(num, den), mult};
}

}  // namespace

Bundle parse_bundle(std::string_view text) {
    Cursor c{text};
    if (c.done()) throw ParseError(c.pos, "empty bundle expression");
    if (c.peek() == '0') {
        c.eat('0');
        if (!c.done()) throw ParseError(c.pos, "trailing input after the zero bundle");
        return Bundle{};
    }
    std::vector<StableSummand> blocks;
    blocks.push_back(term(c));
    while (c.eat('+')) blocks.push_back(term(c));
    if (!c.done()) throw ParseError(c.pos, "trailing input after bundle expression");
    return Bundle::of(std::move(blocks));
}

std::string format_bundle(const Bundle& b) {
    if (b.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& s : b.summands()) {
        if (!first) os << " + ";
        first = false;
        os << "O(" << s.slope.str() << ")";
        if (s.multiplicity != 1) os << "^" << s.multiplicity.get_str();
    }
    return os.str();
}

}  // namespace hnpoly
