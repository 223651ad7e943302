#include <cctype>
#include <charconv>

#include "tcbounds/algebra.hpp"
#include "tcbounds/errors.hpp"

namespace tcb {

namespace {

class ElementParser {
public:
    ElementParser(std::string_view text, const AlgebraPtr& algebra) : text_(text), algebra_(algebra) {}

    Element parse()
    {
        Element result = Element::zero(algebra_);
        skip_space();
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            ++pos_;
        }
        result = add(result, negative ? -term() : term());
        for (;;) {
            skip_space();
            if (at_end())
                break;
            const char op = peek();
            if (op != '+' && op != '-')
                fail("expected '+' or '-'");
            ++pos_;
            Element t = term();
            result = op == '+' ? add(result, t) : subtract(result, t);
        }
        return result;
    }

private:
    Element term()
    {
        skip_space();
        Coeff coeff = 1;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = integer();
            skip_space();
            if (peek() != '*')
                return Element::constant(algebra_, coeff);
            ++pos_;
        }
        std::vector<std::size_t> word;
        for (;;) {
            factor(word);
            skip_space();
            if (peek() != '*')
                break;
            ++pos_;
        }
        auto nw = normalize_word(*algebra_, word, coeff);
        if (nw.coefficient == 0)
            return Element::zero(algebra_);
        return Element::monomial(algebra_, std::move(nw.monomial), nw.coefficient);
    }

    void factor(std::vector<std::size_t>& word)
    {
        skip_space();
        const std::size_t start = pos_;
        if (!std::isalpha(static_cast<unsigned char>(peek())))
            fail("expected a generator name");
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            ++pos_;
        if (peek() == '<') {
            ++pos_;
            const std::size_t digits = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek())))
                ++pos_;
            if (pos_ == digits || peek() != '>')
                fail("malformed factor tag");
            ++pos_;
        }
        const std::string_view name = text_.substr(start, pos_ - start);
        auto index = algebra_->index_of(name);
        if (!index)
            throw ParseError("unknown generator '" + std::string(name) + "'", start);
        skip_space();
        Coeff exponent = 1;
        if (peek() == '^') {
            ++pos_;
            skip_space();
            const std::size_t at = pos_;
            exponent = integer();
            if (exponent < 1)
                throw ParseError("exponent must be positive", at);
            if (exponent > 1 && algebra_->exterior() && algebra_->is_odd(*index))
                throw ParseError("odd generator '" + std::string(name) + "' raised to a power > 1", at);
            if (exponent > 4096)
                throw ParseError("exponent too large", at);
        }
        word.insert(word.end(), static_cast<std::size_t>(exponent), *index);
    }

    Coeff integer()
    {
        const std::size_t start = pos_;
        Coeff value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        if (ec == std::errc::result_out_of_range)
            throw ParseError("integer out of range", start);
        if (ec != std::errc())
            fail("expected an integer");
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        return value;
    }

    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    std::string_view text_;
    const AlgebraPtr& algebra_;
    std::size_t pos_ = 0;
};

}  // namespace

Element parse_element(std::string_view text, const AlgebraPtr& algebra)
{
    return ElementParser(text, algebra).parse();
}

Element parse_element(std::string_view text, const Presentation& p)
{
    return parse_element(text, p.algebra());
}

std::string render(const GradedAlgebra& algebra, const Monomial& m)
{
    std::string out;
    for (std::size_t g = 0; g < m.exponents.size(); ++g) {
        if (m.exponents[g] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += algebra.generators()[g].name;
        if (m.exponents[g] > 1)
            out += '^' + std::to_string(m.exponents[g]);
    }
    return out.empty() ? "1" : out;
}

std::string render(const Element& x)
{
    if (x.is_zero())
        return "0";
    std::string out;
    for (const auto& t : x.terms()) {
        const bool negative = t.coefficient < 0;
        const auto magnitude = negative ? 0 - static_cast<unsigned long long>(t.coefficient)
                                        : static_cast<unsigned long long>(t.coefficient);
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (t.monomial.is_one())
            out += std::to_string(magnitude);
        else if (magnitude == 1)
            out += render(*x.algebra(), t.monomial);
        else
            out += std::to_string(magnitude) + "*" + render(*x.algebra(), t.monomial);
    }
    return out;
}

}  // namespace tcb
