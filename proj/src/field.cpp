#include "homalg/field.hpp"

namespace homalg {

Scalar Field::from_string(const std::string& text) const {
    require(!text.empty(), "empty scalar literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            Scalar s(text);
            s.canonicalize();
            normalize(s);
            return s;
        }
        std::string num = text.substr(0, slash);
        std::string den = text.substr(slash + 1);
        require(!num.empty() && !den.empty(), "malformed scalar literal '" + text + "'");
        if (spec_.is_rational()) {
            Scalar s(num + "/" + den);
            require(sgn(Scalar(mpq_class(den))) != 0, "zero denominator in '" + text + "'");
            s.canonicalize();
            return s;
        }
        Scalar n(num), d(den);
        n.canonicalize();
        d.canonicalize();
        normalize(n);
        normalize(d);
        return mul(n, inv(d));
    } catch (const std::invalid_argument&) {
        throw Error("malformed scalar literal '" + text + "'");
    }
}

}  // namespace homalg
