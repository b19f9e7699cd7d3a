#include "momenta/corpus.hpp"

#include <algorithm>

#include "momenta/atomic_measure.hpp"
#include "momenta/errors.hpp"
#include "momenta/rigidity.hpp"

namespace momenta::corpus {

namespace {

constexpr std::size_t kBoundaryPrependK = 12;

std::vector<Rat> gaussian_entries(std::size_t L) {
    std::vector<Rat> e(L, Rat(0));
    Int df(1); // (2k-1)!! with (-1)!! = 1
    for (std::size_t i = 0; i < L; i += 2) {
        e[i] = Rat(df);
        if (i + 2 < L) df *= Int(static_cast<long>(i) + 1);
    }
    return e;
}

std::vector<Rat> factorial_entries(std::size_t L) {
    std::vector<Rat> e(L);
    Int f(1);
    for (std::size_t k = 0; k < L; ++k) {
        if (k > 0) f *= Int(static_cast<long>(k));
        e[k] = Rat(f);
    }
    return e;
}

std::vector<Rat> catalan_entries(std::size_t L) {
    std::vector<Rat> e(L);
    Int c(1);
    e[0] = Rat(c);
    for (std::size_t k = 1; k < L; ++k) {
        c = c * Int(2 * (2 * static_cast<long>(k) - 1)) /
            Int(static_cast<long>(k) + 1);
        e[k] = Rat(c);
    }
    return e;
}

std::vector<Rat> heavy_tail_entries(std::size_t L) {
    // s_k = 4 (4k+3)! = integral of x^k exp(-x^(1/4))
    std::vector<Rat> e(L);
    Int f(6); // 3!
    long arg = 3;
    for (std::size_t k = 0; k < L; ++k) {
        e[k] = Rat(4 * f);
        for (int step = 0; step < 4 && k + 1 < L; ++step) f *= Int(++arg);
    }
    return e;
}

MomentSequence boundary_prepend_entry(std::size_t L) {
    // Enough heavy-tail entries for the K = 12 region and the requested
    // prefix; the construction is a prefix-stable deterministic rule.
    std::size_t base = std::max<std::size_t>(kBoundaryPrependK + 1,
                                             (L + 1) / 2);
    MomentSequence heavy(heavy_tail_entries(base), Kind::Stieltjes,
                         "heavy_tail");
    MomentSequence sym = symmetrize(heavy);
    rigidity::PrependRegion region =
        rigidity::prepend_region(sym, kBoundaryPrependK);
    rigidity::PrependResult result = rigidity::prepend(
        sym, region.vertex_c1, region.vertex_c2, kBoundaryPrependK);
    std::vector<Rat> entries(result.sequence.entries.begin(),
                             result.sequence.entries.begin() +
                                 static_cast<long>(L));
    return MomentSequence(std::move(entries), Kind::Hamburger,
                          "boundary_prepend");
}

} // namespace

const std::vector<Entry>& list() {
    static const std::vector<Entry> entries = {
        {"boundary_prepend", Kind::Hamburger, "determinate",
         "heavy_tail symmetrized and prepended at the K=12 truncated vertex; "
         "expected index 0"},
        {"catalan", Kind::Stieltjes, "determinate",
         "Catalan numbers; compact support on [0,4]"},
        {"dirac0", Kind::Hamburger, "finite_support", "unit mass at the origin"},
        {"factorial", Kind::Stieltjes, "determinate",
         "s_k = k!; exponential weight on the half line"},
        {"gaussian", Kind::Hamburger, "determinate",
         "c_{2k} = (2k-1)!!; normal weight"},
        {"heavy_tail", Kind::Stieltjes, "indeterminate",
         "s_k = 4(4k+3)!; weight exp(-x^(1/4)), tail exponent 1/4 < 1/2"},
        {"two_atom", Kind::Hamburger, "finite_support",
         "unit masses at +1 and -1"},
    };
    return entries;
}

MomentSequence get(std::string_view name, std::size_t length) {
    if (length < 1) throw DomainError("corpus length must be >= 1");
    if (name == "gaussian")
        return MomentSequence(gaussian_entries(length), Kind::Hamburger,
                              "gaussian");
    if (name == "factorial")
        return MomentSequence(factorial_entries(length), Kind::Stieltjes,
                              "factorial");
    if (name == "catalan")
        return MomentSequence(catalan_entries(length), Kind::Stieltjes,
                              "catalan");
    if (name == "heavy_tail")
        return MomentSequence(heavy_tail_entries(length), Kind::Stieltjes,
                              "heavy_tail");
    if (name == "two_atom") {
        AtomicMeasure mu({{Rat(1), Rat(1)}, {Rat(-1), Rat(1)}});
        MomentSequence seq = moments_from_atoms(mu, length);
        seq.name = "two_atom";
        return seq;
    }
    if (name == "dirac0") {
        AtomicMeasure mu({{Rat(0), Rat(1)}});
        MomentSequence seq = moments_from_atoms(mu, length);
        seq.kind = Kind::Hamburger;
        seq.name = "dirac0";
        return seq;
    }
    if (name == "boundary_prepend") return boundary_prepend_entry(length);
    throw LookupError("unknown corpus entry: " + std::string(name));
}

} // namespace momenta::corpus
