#include "bottbord/ring.hpp"

#include <algorithm>

namespace bottbord {

namespace {

void gen_monos(int nvars, int pos, int remaining, Monomial& cur, std::vector<Monomial>& out)
{
    if (pos == nvars - 1) {
        cur.exp[pos] = remaining;
        out.push_back(cur);
        return;
    }
    for (int e = 0; e <= remaining; ++e) {
        cur.exp[pos] = e;
        gen_monos(nvars, pos + 1, remaining - e, cur, out);
    }
    cur.exp[pos] = 0;
}

} // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int t)
{
    std::vector<Monomial> out;
    Monomial cur{std::vector<int>(nvars, 0)};
    gen_monos(nvars, 0, t, cur, out);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        return GrlexLess{}(b, a); // descending
    });
    return out;
}

} // namespace bottbord
