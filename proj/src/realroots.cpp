#include "typeb/realroots.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace typeb {

namespace {

int sign_of(const BigRat& v) { return v == 0 ? 0 : (v < 0 ? -1 : 1); }

// Remainder scaled by a positive rational only, so Sturm signs survive.
IntPolynomial signed_rational_rem(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigRat> rem(a.coeffs().size());
    for (size_t i = 0; i < rem.size(); ++i) rem[i] = BigRat(a.coeffs()[i]);
    int da = a.degree(), db = b.degree();
    BigRat lead(b.leading());
    for (int i = da; i >= db; --i) {
        BigRat q = rem[i] / lead;
        if (q == 0) continue;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * BigRat(b.coeff(j));
    }
    BigInt den = 1;
    for (const auto& r : rem)
        den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(r));
    std::vector<BigInt> out(rem.size());
    for (size_t i = 0; i < rem.size(); ++i)
        out[i] = boost::multiprecision::numerator(rem[i]) *
                 (den / boost::multiprecision::denominator(rem[i]));
    IntPolynomial r(std::move(out));
    if (r.is_zero()) return r;
    BigInt g = r.content();
    std::vector<BigInt> c = r.coeffs();
    for (auto& v : c) v /= g;
    return IntPolynomial(std::move(c));
}

std::vector<IntPolynomial> sturm_chain(const IntPolynomial& s) {
    std::vector<IntPolynomial> chain{s, s.derivative()};
    while (!chain.back().is_zero() && chain.back().degree() >= 1) {
        IntPolynomial r = signed_rational_rem(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) break;
        chain.push_back(r * BigInt(-1));
    }
    return chain;
}

int variations_at(const std::vector<IntPolynomial>& chain, const BigRat& x) {
    int count = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sign_of(p.evaluate(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

BigRat cauchy_bound(const IntPolynomial& p) {
    BigRat m = 0;
    BigRat lead = BigRat(p.leading());
    if (lead < 0) lead = -lead;
    for (int i = 0; i < p.degree(); ++i) {
        BigRat c(p.coeff(i));
        if (c < 0) c = -c;
        c /= lead;
        if (c > m) m = c;
    }
    return m + 1;
}

struct Isolation {
    std::vector<IntPolynomial> chain;
    BigRat bound;
    int var_low = 0, var_high = 0;
};

int count_in(const Isolation& iso, const BigRat& a, const BigRat& b) {
    return variations_at(iso.chain, a) - variations_at(iso.chain, b);
}

}  // namespace

std::vector<RealRoot> isolate_roots_squarefree(const IntPolynomial& s, int refine_budget) {
    std::vector<RealRoot> out;
    if (s.degree() < 1) return out;
    Isolation iso{sturm_chain(s), cauchy_bound(s), 0, 0};
    iso.var_low = variations_at(iso.chain, -iso.bound);
    iso.var_high = variations_at(iso.chain, iso.bound);

    struct Piece { BigRat lo, hi; int count; };
    std::vector<Piece> work{{-iso.bound, iso.bound, iso.var_low - iso.var_high}};
    int steps = 0;
    while (!work.empty()) {
        Piece pc = work.back();
        work.pop_back();
        if (pc.count <= 0) continue;
        if (pc.count == 1) {
            RealRoot r;
            r.exact = false;
            r.lo = pc.lo;
            r.hi = pc.hi;
            r.carrier = s;
            out.push_back(std::move(r));
            continue;
        }
        if (++steps > refine_budget * std::max(1, s.degree()))
            throw std::runtime_error("root isolation budget exhausted");
        BigRat mid = (pc.lo + pc.hi) / 2;
        if (s.evaluate(mid) == 0) {
            RealRoot r;
            r.exact = true;
            r.value = mid;
            r.carrier = s;
            out.push_back(std::move(r));
            // Shrink a window around the exact root until it holds only mid.
            BigRat eps = (pc.hi - pc.lo) / 4;
            while (count_in(iso, mid - eps, mid + eps) > 1) eps /= 2;
            int left = count_in(iso, pc.lo, mid - eps);
            int right = count_in(iso, mid + eps, pc.hi);
            if (left > 0) work.push_back({pc.lo, mid - eps, left});
            if (right > 0) work.push_back({mid + eps, pc.hi, right});
        } else {
            int left = count_in(iso, pc.lo, mid);
            if (left > 0) work.push_back({pc.lo, mid, left});
            if (pc.count - left > 0) work.push_back({mid, pc.hi, pc.count - left});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const RealRoot& a, const RealRoot& b) { return a.upper() < b.upper(); });
    return out;
}

namespace {

// Halve an interval root, keeping exactly one root inside.
void refine_once(RealRoot& r) {
    if (r.exact) return;
    BigRat mid = (r.lo + r.hi) / 2;
    if (r.carrier.evaluate(mid) == 0) {
        r.exact = true;
        r.value = mid;
        return;
    }
    Isolation iso{sturm_chain(r.carrier), 0, 0, 0};
    if (variations_at(iso.chain, r.lo) - variations_at(iso.chain, mid) == 1)
        r.hi = mid;
    else
        r.lo = mid;
}

bool roots_overlap(const RealRoot& a, const RealRoot& b) {
    if (a.exact && b.exact) return a.value == b.value;
    if (a.exact) return a.value > b.lower() && a.value <= b.upper();
    if (b.exact) return b.value > a.lower() && b.value <= a.upper();
    return a.upper() > b.lower() && b.upper() > a.lower();
}

// Refines a root list (pairwise distinct reals) until the representations are
// pairwise disjoint and hence totally ordered.
void disjointify(std::vector<RealRoot>& roots, int refine_budget) {
    for (int pass = 0; pass < refine_budget; ++pass) {
        std::sort(roots.begin(), roots.end(),
                  [](const RealRoot& a, const RealRoot& b) { return a.lower() < b.lower(); });
        bool clean = true;
        for (size_t i = 0; i + 1 < roots.size(); ++i) {
            if (roots_overlap(roots[i], roots[i + 1])) {
                clean = false;
                refine_once(roots[i]);
                refine_once(roots[i + 1]);
            }
        }
        if (clean) return;
    }
    throw std::runtime_error("root separation budget exhausted");
}

}  // namespace

RootCertificate certify_real_rooted(const IntPolynomial& p, int refine_budget) {
    if (p.is_zero()) throw std::domain_error("cannot certify the zero polynomial");
    RootCertificate cert;
    cert.polynomial = p;
    if (p.degree() == 0) {
        cert.real_rooted = true;
        return cert;
    }
    int v0 = p.trailing_zero_count();
    if (v0 > 0) {
        RealRoot zero;
        zero.exact = true;
        zero.value = 0;
        zero.carrier = IntPolynomial::monomial(1);
        zero.multiplicity = v0;
        cert.roots.push_back(zero);
        cert.root_count += v0;
        cert.distinct_roots += 1;
    }
    IntPolynomial q = p.shift_down(v0);
    if (q.degree() >= 1) {
        for (auto& [factor, mult] : squarefree_decomposition(q)) {
            std::vector<RealRoot> roots;
            try {
                roots = isolate_roots_squarefree(factor, refine_budget);
            } catch (const std::runtime_error&) {
                cert.inconclusive = true;
                cert.real_rooted = false;
                return cert;
            }
            SturmRecord rec;
            rec.factor = factor.to_string();
            rec.multiplicity = mult;
            rec.bound = cauchy_bound(factor);
            auto chain = sturm_chain(factor);
            rec.variations_low = variations_at(chain, -rec.bound);
            rec.variations_high = variations_at(chain, rec.bound);
            cert.sturm_records.push_back(std::move(rec));
            for (auto& r : roots) {
                r.multiplicity = mult;
                cert.roots.push_back(std::move(r));
                cert.root_count += mult;
                cert.distinct_roots += 1;
            }
        }
    }
    try {
        disjointify(cert.roots, refine_budget);
    } catch (const std::runtime_error&) {
        cert.inconclusive = true;  // never reported as a false negative
        cert.real_rooted = false;
        return cert;
    }
    cert.real_rooted = cert.root_count == p.degree();
    return cert;
}

std::string RootCertificate::to_json() const {
    nlohmann::json j;
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : polynomial.coeffs()) coeffs.push_back(to_decimal(c));
    j["coefficients"] = coeffs;
    j["degree"] = polynomial.degree();
    j["real_rooted"] = real_rooted;
    j["root_count"] = root_count;
    j["distinct_roots"] = distinct_roots;
    j["inconclusive"] = inconclusive;
    nlohmann::json roots_j = nlohmann::json::array();
    for (const auto& r : roots) {
        nlohmann::json rj;
        rj["multiplicity"] = r.multiplicity;
        if (r.exact)
            rj["value"] = to_decimal(r.value);
        else {
            rj["interval"] = {to_decimal(r.lo), to_decimal(r.hi)};
        }
        roots_j.push_back(rj);
    }
    j["isolating_intervals"] = roots_j;
    nlohmann::json recs = nlohmann::json::array();
    for (const auto& rec : sturm_records)
        recs.push_back({{"factor", rec.factor},
                        {"multiplicity", rec.multiplicity},
                        {"bound", to_decimal(rec.bound)},
                        {"variations_low", rec.variations_low},
                        {"variations_high", rec.variations_high}});
    j["sturm_sign_variations"] = recs;
    return j.dump();
}

namespace {

struct CarrierEntry {
    IntPolynomial carrier;
    int mult_f = 0;
    int mult_g = 0;
};

// Splits the square-free factor sets of f and g into a pairwise-coprime basis
// so equal roots across the two polynomials share a carrier.
std::vector<CarrierEntry> coprime_basis(const IntPolynomial& f, const IntPolynomial& g) {
    std::vector<CarrierEntry> entries;
    auto push = [&](const IntPolynomial& c, int mf, int mg) {
        if (c.degree() < 1) return;
        IntPolynomial prim = c.primitive();
        for (auto& e : entries)
            if (e.carrier == prim) {
                e.mult_f += mf;
                e.mult_g += mg;
                return;
            }
        entries.push_back({prim, mf, mg});
    };
    for (auto& [factor, mult] : squarefree_decomposition(f)) push(factor, mult, 0);
    for (auto& [factor, mult] : squarefree_decomposition(g)) push(factor, 0, mult);

    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < entries.size() && !changed; ++i)
            for (size_t j = i + 1; j < entries.size() && !changed; ++j) {
                IntPolynomial d = poly_gcd(entries[i].carrier, entries[j].carrier);
                if (d.degree() < 1) continue;
                if (d == entries[i].carrier && d == entries[j].carrier) {
                    entries[i].mult_f += entries[j].mult_f;
                    entries[i].mult_g += entries[j].mult_g;
                    entries.erase(entries.begin() + j);
                    changed = true;
                    break;
                }
                CarrierEntry a = entries[i], b = entries[j];
                entries.erase(entries.begin() + j);
                entries.erase(entries.begin() + i);
                push(d, a.mult_f + b.mult_f, a.mult_g + b.mult_g);
                push(poly_divide_exact(a.carrier, d).primitive(), a.mult_f, a.mult_g);
                push(poly_divide_exact(b.carrier, d).primitive(), b.mult_f, b.mult_g);
                changed = true;
            }
    }
    return entries;
}

}  // namespace

InterleaveCertificate certify_interleaves(const IntPolynomial& f, const IntPolynomial& g,
                                          int refine_budget) {
    InterleaveCertificate cert;
    if (f.is_zero() || g.is_zero()) {
        const IntPolynomial& other = f.is_zero() ? g : f;
        cert.holds = other.is_zero() || other.leading() > 0;
        cert.relation = InterleaveRelation::ZeroConvention;
        cert.witness = "zero polynomial convention";
        return cert;
    }
    RootCertificate cf = certify_real_rooted(f, refine_budget);
    RootCertificate cg = certify_real_rooted(g, refine_budget);
    if (cf.inconclusive || cg.inconclusive) {
        cert.inconclusive = true;
        return cert;
    }
    if (!cf.real_rooted || !cg.real_rooted)
        throw std::domain_error("interleaving requires real-rooted inputs");
    int df = f.degree(), dg = g.degree();
    if (df != dg && df + 1 != dg) {
        cert.holds = false;
        cert.witness = "degree gap exceeds one";
        return cert;
    }

    // Shared carriers give shared root identities; disjoint intervals give a
    // total order over the union.
    std::vector<CarrierEntry> basis = coprime_basis(f, g);
    struct Tagged {
        RealRoot root;
        int mult_f, mult_g;
    };
    std::vector<Tagged> tagged;
    try {
        for (const auto& e : basis)
            for (auto& r : isolate_roots_squarefree(e.carrier, refine_budget))
                tagged.push_back({r, e.mult_f, e.mult_g});
    } catch (const std::runtime_error&) {
        cert.inconclusive = true;
        return cert;
    }
    bool separated = false;
    for (int pass = 0; pass < refine_budget && !separated; ++pass) {
        std::sort(tagged.begin(), tagged.end(),
                  [](const Tagged& a, const Tagged& b) { return a.root.lower() < b.root.lower(); });
        separated = true;
        for (size_t i = 0; i + 1 < tagged.size(); ++i)
            if (roots_overlap(tagged[i].root, tagged[i + 1].root)) {
                separated = false;
                refine_once(tagged[i].root);
                refine_once(tagged[i + 1].root);
            }
    }
    if (!separated) {
        cert.inconclusive = true;
        return cert;
    }
    std::sort(tagged.begin(), tagged.end(),
              [](const Tagged& a, const Tagged& b) { return a.root.upper() < b.root.upper(); });

    std::vector<int> f_idx, g_idx;
    std::string witness;
    for (size_t i = 0; i < tagged.size(); ++i) {
        for (int c = 0; c < tagged[i].mult_f; ++c) f_idx.push_back(static_cast<int>(i));
        for (int c = 0; c < tagged[i].mult_g; ++c) g_idx.push_back(static_cast<int>(i));
        if (!witness.empty()) witness += " < ";
        witness += tagged[i].root.exact
                       ? to_decimal(tagged[i].root.value)
                       : "(" + to_decimal(tagged[i].root.lo) + "," + to_decimal(tagged[i].root.hi) + "]";
        witness += "{f:" + std::to_string(tagged[i].mult_f) +
                   ",g:" + std::to_string(tagged[i].mult_g) + "}";
    }
    cert.witness = witness;

    if (df == dg) {
        // f_1 <= g_1 <= f_2 <= ... <= f_d <= g_d
        bool ok = true;
        for (int i = 0; i < df && ok; ++i) {
            ok = f_idx[i] <= g_idx[i];
            if (i + 1 < df) ok = ok && g_idx[i] <= f_idx[i + 1];
        }
        cert.holds = ok;
        cert.relation = InterleaveRelation::AlternatesLeft;
    } else {
        // g_1 <= f_1 <= g_2 <= ... <= f_{d-1} <= g_d
        bool ok = true;
        for (int i = 0; i < df && ok; ++i)
            ok = g_idx[i] <= f_idx[i] && f_idx[i] <= g_idx[i + 1];
        cert.holds = ok;
        cert.relation = InterleaveRelation::Interlaces;
    }
    return cert;
}

std::string InterleaveCertificate::to_json() const {
    nlohmann::json j;
    j["holds"] = holds;
    j["inconclusive"] = inconclusive;
    switch (relation) {
        case InterleaveRelation::Interlaces: j["relation"] = "interlaces"; break;
        case InterleaveRelation::AlternatesLeft: j["relation"] = "alternates_left"; break;
        case InterleaveRelation::ZeroConvention: j["relation"] = "zero_convention"; break;
        case InterleaveRelation::None: j["relation"] = "none"; break;
    }
    j["witness"] = witness;
    return j.dump();
}

}  // namespace typeb
