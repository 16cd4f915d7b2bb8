#include "superbialg/scalar.hpp"

#include "superbialg/errors.hpp"

namespace superbialg {

namespace {

mpz_class parse_integer(const std::string& text)
{
    if (text.empty())
        throw ParseError("empty integer");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size())
        throw ParseError("malformed integer '" + text + "'");
    for (std::size_t i = start; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9')
            throw ParseError("malformed integer '" + text + "'");
    mpz_class z;
    z.set_str(text[0] == '+' ? text.substr(1) : text, 10);
    return z;
}

}  // namespace

Scalar::Scalar(long num, long den)
{
    if (den == 0)
        throw ArithmeticError("zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Scalar Scalar::from_strings(const std::string& num, const std::string& den)
{
    mpz_class n = parse_integer(num);
    mpz_class d = parse_integer(den);
    if (d == 0)
        throw ParseError("zero denominator");
    mpq_class q(n, d);
    q.canonicalize();
    return Scalar(q);
}

Scalar Scalar::parse(const std::string& text)
{
    auto slash = text.find('/');
    if (slash == std::string::npos)
        return from_strings(text, "1");
    return from_strings(text.substr(0, slash), text.substr(slash + 1));
}

std::string Scalar::str() const
{
    if (q_.get_den() == 1)
        return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    if (o.is_zero())
        throw ArithmeticError("division by zero");
    q_ /= o.q_;
    return *this;
}

}  // namespace superbialg
