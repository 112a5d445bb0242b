#pragma once

#include <optional>
#include <string>
#include <vector>

#include "typeb/bigint.hpp"
#include "typeb/polynomial.hpp"

namespace typeb {

// One real root: either an exact rational or an open-closed interval (lo, hi]
// containing exactly one root of its square-free carrier.
struct RealRoot {
    bool exact = false;
    BigRat value;  // when exact
    BigRat lo, hi; // when not exact; carrier(lo) != 0 != carrier(hi)
    IntPolynomial carrier;
    int multiplicity = 1;

    BigRat upper() const { return exact ? value : hi; }
    BigRat lower() const { return exact ? value : lo; }
};

struct SturmRecord {
    std::string factor;       // carrier polynomial
    int multiplicity = 1;
    BigRat bound;             // roots confined to (-bound, bound]
    int variations_low = 0;   // sign variations at -bound
    int variations_high = 0;  // sign variations at +bound
};

struct RootCertificate {
    IntPolynomial polynomial;
    bool real_rooted = false;
    int root_count = 0;      // with multiplicity
    int distinct_roots = 0;
    bool inconclusive = false;  // refinement budget exhausted
    std::vector<RealRoot> roots;  // distinct roots, ascending
    std::vector<SturmRecord> sturm_records;
    std::string to_json() const;
};

// Exact certification via Sturm sequences on the square-free factors.
RootCertificate certify_real_rooted(const IntPolynomial& p, int refine_budget = 128);

// Distinct real roots of a square-free primitive polynomial, ascending.
std::vector<RealRoot> isolate_roots_squarefree(const IntPolynomial& s, int refine_budget = 128);

enum class InterleaveRelation { Interlaces, AlternatesLeft, ZeroConvention, None };

struct InterleaveCertificate {
    bool holds = false;
    bool inconclusive = false;
    InterleaveRelation relation = InterleaveRelation::None;
    std::string witness;  // merged root ordering
    std::string to_json() const;
};

// Checks f << g (f interlaces g or alternates left of g, weak inequalities,
// shared roots allowed). Throws std::domain_error when an input is not
// real-rooted.
InterleaveCertificate certify_interleaves(const IntPolynomial& f, const IntPolynomial& g,
                                          int refine_budget = 256);

}  // namespace typeb
