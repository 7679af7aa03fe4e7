#include "udg/geometry.hpp"

#include <cctype>
#include <stdexcept>

namespace udg {

const Point& Point::origin() {
    static const Point o{FieldElem::zero(), FieldElem::zero()};
    return o;
}

RotationSpec rot_pi_3() {
    return {FieldElem{Rat(1, 2)}, FieldElem{Rat(0), Rat(1, 2)}};
}

std::string to_string(const Point& p) {
    return "(" + to_string(p.x) + ", " + to_string(p.y) + ")";
}

Point parse_point(std::string_view text) {
    // Shape: ( <quadruple> , <quadruple> )
    size_t i = 0, n = text.size();
    auto skip = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip();
    if (i >= n || text[i] != '(') throw std::invalid_argument("point must start with '(': " + std::string(text));
    ++i;
    auto read_quadruple = [&]() -> FieldElem {
        skip();
        if (i >= n || text[i] != '(') throw std::invalid_argument("expected '(' of quadruple: " + std::string(text));
        size_t start = i;
        while (i < n && text[i] != ')') ++i;
        if (i >= n) throw std::invalid_argument("unterminated quadruple: " + std::string(text));
        ++i;
        return parse_field_elem(text.substr(start, i - start));
    };
    FieldElem x = read_quadruple();
    skip();
    if (i >= n || text[i] != ',') throw std::invalid_argument("expected ',' between coordinates: " + std::string(text));
    ++i;
    FieldElem y = read_quadruple();
    skip();
    if (i >= n || text[i] != ')') throw std::invalid_argument("expected closing ')': " + std::string(text));
    ++i;
    skip();
    if (i != n) throw std::invalid_argument("trailing junk after point: " + std::string(text));
    return {std::move(x), std::move(y)};
}

}  // namespace udg
