#include "superbialg/format.hpp"

#include <cctype>

namespace superbialg {

namespace {

template <std::size_t Rank>
std::string render(const Tensor<Rank>& t)
{
    if (t.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [idx, c] : t.entries()) {
        Scalar mag = c.sign() < 0 ? -c : c;
        if (first)
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        first = false;
        if (!(mag == Scalar(1)))
            out += mag.str() + "*";
        for (std::size_t r = 0; r < Rank; ++r) {
            if (r)
                out += "⊗";
            out += t.basis().label(idx[r]);
        }
    }
    return out;
}

class ElementParser {
public:
    ElementParser(const GradedBasis& basis, const std::string& text) : basis_(basis), text_(text) {}

    Element run()
    {
        skip_space();
        if (text_.compare(pos_, std::string::npos, "0") == 0)
            return Element(basis_);
        Element e = expression();
        skip_space();
        if (pos_ != text_.size())
            error("unexpected '" + text_.substr(pos_, 1) + "'");
        return e;
    }

private:
    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    // Accepts ASCII '-' and U+2212.
    bool eat_minus()
    {
        skip_space();
        if (text_.compare(pos_, 1, "-") == 0) {
            pos_ += 1;
            return true;
        }
        if (text_.compare(pos_, 3, "\xE2\x88\x92") == 0) {
            pos_ += 3;
            return true;
        }
        return false;
    }

    bool eat(char ch)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    Element expression()
    {
        Element acc(basis_);
        bool negative = eat_minus();
        if (!negative)
            eat('+');
        while (true) {
            Element t = term();
            acc += negative ? -t : t;
            if (eat('+'))
                negative = false;
            else if (eat_minus())
                negative = true;
            else
                break;
        }
        return acc;
    }

    Element term()
    {
        skip_space();
        Scalar coef = 1;
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            coef = number();
            eat('*');
        }
        return coef * atom();
    }

    Scalar number()
    {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        std::string num = text_.substr(start, pos_ - start);
        std::string den = "1";
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            den = text_.substr(start, pos_ - start);
        }
        return Scalar::from_strings(num, den);
    }

    Element atom()
    {
        skip_space();
        std::size_t best = 0;
        std::size_t best_len = 0;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            const auto& l = basis_.label(i);
            if (l.size() > best_len && text_.compare(pos_, l.size(), l) == 0) {
                best = i;
                best_len = l.size();
            }
        }
        if (best_len > 0) {
            pos_ += best_len;
            return basis_vector(basis_, static_cast<int>(best));
        }
        if (eat('(')) {
            Element inner = expression();
            if (!eat(')'))
                error("missing ')'");
            return inner;
        }
        error("expected a basis label");
        return Element(basis_);
    }

    [[noreturn]] void error(const std::string& what) const
    {
        throw ParseError("element '" + text_ + "' at offset " + std::to_string(pos_) + ": " + what);
    }

    const GradedBasis& basis_;
    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const Element& x) { return render(x); }
std::string to_string(const Tensor2& t) { return render(t); }
std::string to_string(const Tensor3& t) { return render(t); }

Element parse_element(const GradedBasis& basis, const std::string& text)
{
    return ElementParser(basis, text).run();
}

}  // namespace superbialg
