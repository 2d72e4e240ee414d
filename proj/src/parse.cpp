#include "residua/parse.hpp"

#include <cctype>
#include <string>

#include "residua/errors.hpp"

namespace residua {

namespace {

class Cursor {
public:
    Cursor(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool done() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::size_t position() const { return pos_; }

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + " at position " + std::to_string(pos_), pos_);
    }

    std::string digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected a number");
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string identifier() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_])))
            fail("expected a variable name");
        ++pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, const VarSetPtr& vars) {
    Cursor cur(text);
    std::vector<Term> terms;

    bool first = true;
    while (true) {
        if (cur.done()) {
            if (first) cur.fail("empty polynomial");
            break;
        }
        int sign = 1;
        if (cur.accept('-')) {
            sign = -1;
        } else if (cur.accept('+')) {
            // explicit plus
        } else if (!first) {
            cur.fail("expected '+' or '-'");
        }
        first = false;

        Rational coeff(sign);
        ExponentVec expo(vars->size(), 0);
        bool saw_factor = false;

        char c = cur.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = integer_from_string(cur.digits());
            if (cur.accept('/')) {
                Integer den = integer_from_string(cur.digits());
                if (sign_of(den) == 0) cur.fail("zero denominator");
                coeff *= make_rational(std::move(num), std::move(den));
            } else {
                coeff *= Rational(std::move(num));
            }
            saw_factor = true;
            if (!cur.accept('*')) {
                terms.push_back(Term{std::move(expo), std::move(coeff)});
                continue;
            }
        }

        // monomial: var ('^' int)? ('*' var ('^' int)?)*
        while (true) {
            std::size_t name_pos = cur.position();
            std::string name = cur.identifier();
            auto idx = vars->index_of(name);
            if (!idx)
                throw ParseError("unknown variable '" + name + "' at position " + std::to_string(name_pos),
                                 name_pos);
            Exponent e = 1;
            if (cur.accept('^')) {
                int esign = cur.accept('-') ? -1 : 1;
                Integer raw = integer_from_string(cur.digits());
                if (!raw.fits_slong_p()) cur.fail("exponent too large");
                e = esign * static_cast<Exponent>(raw.get_si());
            }
            if (__builtin_add_overflow(expo[*idx], e, &expo[*idx])) cur.fail("exponent overflow");
            saw_factor = true;
            if (!cur.accept('*')) break;
        }
        if (!saw_factor) cur.fail("expected a term");
        terms.push_back(Term{std::move(expo), std::move(coeff)});
    }

    return Polynomial::from_terms(vars, std::move(terms));
}

} // namespace residua
