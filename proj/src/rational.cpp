#include "folia/rational.hpp"

#include "folia/errors.hpp"

namespace folia {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParseError("malformed rational: " + s);
    if (q.get_den() == 0) throw ParseError("zero denominator: " + s);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& r) {
    return r.get_str();
}

} // namespace folia
