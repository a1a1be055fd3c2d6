#include <cctype>
#include <string>

#include "ratdecomp/field.hpp"
#include "ratdecomp/parse.hpp"

namespace ratdecomp {

namespace {

std::string strip(std::string_view s)
{
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            out += c;
    return out;
}

[[noreturn]] void bad(const std::string& text, const std::string& why)
{
    throw Error(ErrorCode::BadFieldDescriptor, "field descriptor '" + text + "': " + why);
}

bool is_prime_power(std::int64_t q)
{
    for (std::int64_t p = 2; p * p <= q; ++p) {
        if (q % p != 0)
            continue;
        while (q % p == 0)
            q /= p;
        return q == 1;
    }
    return false;
}

} // namespace

Field make_field(std::string_view descriptor)
{
    const std::string text = strip(descriptor);
    std::size_t pos = 0;
    Field base;
    if (text.rfind("GF(", 0) == 0) {
        std::size_t close = text.find(')');
        if (close == std::string::npos)
            bad(text, "missing ')'");
        std::string digits = text.substr(3, close - 3);
        if (digits.empty() || digits.size() > 18
            || digits.find_first_not_of("0123456789") != std::string::npos)
            bad(text, "GF(...) needs a positive integer");
        std::int64_t q = std::stoll(digits);
        pos = close + 1;
        if (!is_prime(q)) {
            if (is_prime_power(q) && pos == text.size())
                throw Error(ErrorCode::MissingModulus,
                            "GF(" + digits + ") needs an explicit modulus, e.g. GF(p)[a]/(a^2+...)");
            throw Error(ErrorCode::NonPrimeModulus, "GF(" + digits + "): modulus is not prime");
        }
        base = Field::prime_field(q);
    } else if (!text.empty() && text[0] == 'Q') {
        base = Field::rationals();
        pos = 1;
    } else {
        bad(text, "expected Q or GF(p)");
    }
    if (pos == text.size())
        return base;

    // [sym]/(modulus)
    if (text[pos] != '[')
        bad(text, "unexpected trailing text");
    std::size_t close = text.find(']', pos);
    if (close == std::string::npos)
        bad(text, "missing ']'");
    std::string sym = text.substr(pos + 1, close - pos - 1);
    if (sym.empty() || !std::isalpha(static_cast<unsigned char>(sym[0])))
        bad(text, "invalid generator symbol");
    for (char c : sym)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            bad(text, "invalid generator symbol");
    pos = close + 1;
    if (text.compare(pos, 2, "/(") != 0 || text.back() != ')')
        bad(text, "expected /(<modulus>) after the generator");
    std::string modulus = text.substr(pos + 2, text.size() - pos - 3);
    // A further bracket means a tower.
    if (modulus.find('[') != std::string::npos || modulus.find(']') != std::string::npos)
        throw Error(ErrorCode::UnsupportedTower, "nested extensions are not supported");
    if (sym == "x")
        bad(text, "'x' is reserved for the polynomial variable");
    Poly m = parse_polynomial(modulus, base, sym);
    if (m.degree() != 2)
        throw Error(ErrorCode::BadFieldDescriptor, "extension modulus must have degree 2");
    if (!m.is_monic())
        throw Error(ErrorCode::BadFieldDescriptor, "extension modulus must be monic");
    return Field::extension(base, m.coeff(1), m.coeff(0), sym);
}

} // namespace ratdecomp
