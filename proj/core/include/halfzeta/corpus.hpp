#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "halfzeta/curve.hpp"
#include "halfzeta/motive.hpp"
#include "halfzeta/zeta.hpp"

namespace halfzeta {

/// Generator behind every seeded corpus; uniform draws are rng() % n.
using CorpusRng = std::mt19937_64;
inline constexpr const char* rng_name = "mt19937_64";

/// A certified curve (or a built-in zeta function) with its point counts.
struct CorpusCurve {
    std::string label;
    std::optional<CurveModel> model;
    ZetaFunction zeta;
    PointCountTable counts;  ///< empty for built-ins

    /// N_1 from the table, or predicted from the zeta function for built-ins.
    BigInt N1() const;
};

/// Counts N_1..N_{g+1}, builds and certifies (RH included). Throws
/// certification_error with the reason.
CorpusCurve certify_curve(std::string label, const CurveModel& c, int workers = 1);

/// Every valid Weierstrass model over F_q in the families of find_type_c_curve,
/// in canonical coefficient order.
std::vector<CurveModel> elliptic_models(const SquareOrder& o);

/// Uniform random models of the given genus, redrawn until valid. Odd p:
/// y^2 = f(x) with deg f in {2g+1, 2g+2}; p = 2: y^2 + h y = f with h != 0.
std::vector<CurveModel> random_hyperelliptic(const SquareOrder& o, int genus, int count, CorpusRng& rng);

/// Fixed smooth plane models available over F_q: the conic XZ - Y^2, the
/// Fermat cubic and quartic (when p does not divide the degree) and the
/// Klein quartic X^3 Y + Y^3 Z + Z^3 X (p != 7).
std::vector<std::pair<std::string, CurveModel>> plane_examples(const SquareOrder& o);

struct CorpusOptions {
    std::vector<SquareOrder> orders{SquareOrder(2, 1), SquareOrder(3, 1), SquareOrder(5, 1)};
    bool elliptic_exhaustive = true;
    int random_per_order_q9 = 20;  ///< genus 2-3 curves over F_9
    int random_per_order = 4;      ///< genus 2-3 curves over the other orders
    bool plane = true;
    std::uint64_t seed = 7;
    int workers = 1;
};

/// Built-ins (P^1, E) per order, the type-(c) model, exhaustive elliptic
/// curves, seeded random hyperelliptic curves and the plane examples.
std::vector<CorpusCurve> build_corpus(const CorpusOptions& opts);

/// Seeded random motives over o: curve motives, h^1 pieces, tensors,
/// exterior squares, twists and direct sums drawn from certified numerators.
std::vector<WeilMotive> random_motives(const SquareOrder& o, int count, std::uint64_t seed);

}  // namespace halfzeta
