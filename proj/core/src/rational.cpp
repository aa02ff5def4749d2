#include "schurtab/rational.hpp"

#include "schurtab/error.hpp"

namespace schurtab {

std::string ratToString(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat ratFromString(std::string_view s) {
    if (s.empty()) fail(ErrorCode::Usage, "empty rational literal");
    std::string str(s);
    auto slash = str.find('/');
    try {
        if (slash == std::string::npos) {
            Rat r(mpz_class(str), 1);
            r.canonicalize();
            return r;
        }
        mpz_class num(str.substr(0, slash));
        mpz_class den(str.substr(slash + 1));
        if (den == 0) fail(ErrorCode::Usage, "zero denominator in '" + str + "'");
        Rat r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        fail(ErrorCode::Usage, "malformed rational '" + str + "'");
    }
}

} // namespace schurtab
