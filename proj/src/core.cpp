#include "mvlab/core.hpp"

#include <sstream>

namespace mvlab {

Root lex_root_at(int index) {
    int j = 2;
    while ((j) * (j - 1) / 2 <= index) ++j;
    return Root{index - (j - 1) * (j - 2) / 2 + 1, j};
}

std::vector<Root> lex_roots(Rank r) {
    std::vector<Root> out;
    out.reserve(static_cast<std::size_t>(r.roots()));
    for (int j = 2; j <= r.letters(); ++j)
        for (int i = 1; i < j; ++i) out.push_back(Root{i, j});
    return out;
}

int Weight::pairing(int i) const {
    const int n = static_cast<int>(c.size());
    int v = 2 * (*this)[i];
    if (i > 1) v -= (*this)[i - 1];
    if (i < n) v -= (*this)[i + 1];
    return v;
}

std::string to_string(Root r) {
    return "(" + std::to_string(r.i) + "," + std::to_string(r.j) + ")";
}

std::string to_string(const Weight& w) {
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < w.c.size(); ++k) os << (k ? "," : "") << w.c[k];
    os << ')';
    return os.str();
}

}  // namespace mvlab
