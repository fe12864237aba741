#include <cmath>
#include <set>

#include "doctest.h"
#include "huella/analyze.hpp"
#include "support.hpp"

using namespace huella;

namespace {

const VectorMap decagon = builtin_map("decagon");
const VectorMap lattice = builtin_map("lattice");

QVec2 q(std::int64_t x, std::int64_t y) { return {Q64::integer(x), Q64::integer(y)}; }

WalkPath walk_of(const std::string& number, std::size_t n, const VectorMap& map, bool pad = false)
{
    StreamOptions options;
    options.pad_zeros = pad;
    DigitStream stream(parse_number(number), options);
    const TakeResult r = stream.take(n);
    return build_walk(r.digits, map, {}, r.terminated);
}

ClassifyOptions classify_options(std::size_t max_lag)
{
    ClassifyOptions o;
    o.max_lag = max_lag;
    return o;
}

// p_{n+L} - p_n == D for every n >= start, checked point by point.
bool holds_everywhere(const WalkPath& path, const DriftReport& r, double tol)
{
    for (std::size_t n = r.start; n + r.lag < path.size(); ++n) {
        if (path.mode == CoordMode::exact) {
            const QVec2 d{path.exact_point(n + r.lag).x - path.exact_point(n).x,
                          path.exact_point(n + r.lag).y - path.exact_point(n).y};
            if (!(d == *r.drift.exact)) return false;
        } else {
            if (std::abs(path.xs[n + r.lag] - path.xs[n] - r.drift.value.x) > tol) return false;
            if (std::abs(path.ys[n + r.lag] - path.ys[n] - r.drift.value.y) > tol) return false;
        }
    }
    return true;
}

VectorMap constant_map()
{
    std::array<QVec2, 10> vs;
    vs.fill(q(1, 1));
    return VectorMap::exact("constant", vs);
}

}  // namespace

TEST_CASE("drift examples")
{
    const Drift a = drift_vector(DigitSeq{0, 5}, decagon);
    CHECK(a.value == Vec2{0.0, 0.0});
    CHECK(is_zero(a, default_float_tolerance));

    const Drift b = drift_vector(DigitSeq{7, 1, 4, 2, 8, 5}, lattice);
    CHECK(*b.exact == q(0, 0));
    CHECK(is_zero(b, 0.0));

    CHECK(*drift_vector(DigitSeq{3}, lattice).exact == q(-1, 2));
    CHECK_FALSE(is_zero(drift_vector(DigitSeq{3}, lattice), 1e-6));
}

TEST_CASE("detector examples")
{
    const WalkPath fourteenth = walk_of("1/14", 600, lattice);
    const Detection d = detect_translation(fourteenth, lattice, DetectOptions{200});
    REQUIRE(d.outcome == DetectOutcome::found);
    CHECK(d.report->lag == 6);
    CHECK(d.report->start == 1);
    CHECK(*d.report->drift.exact == q(0, 0));
    CHECK(d.report->closed);

    const WalkPath third = walk_of("1/3", 100, decagon);
    const Detection t = detect_translation(third, decagon, DetectOptions{33});
    REQUIRE(t.outcome == DetectOutcome::found);
    CHECK(t.report->lag == 1);
    CHECK(t.report->start == 0);
    CHECK(t.report->drift.value.x == doctest::Approx(decagon.vector(3).x).epsilon(1e-12));
    CHECK(t.report->drift.value.y == doctest::Approx(decagon.vector(3).y).epsilon(1e-12));
    CHECK_FALSE(t.report->closed);

    const WalkPath pi = walk_of("pi", 10000, decagon);
    const Detection p = detect_translation(pi, decagon, DetectOptions{2000});
    CHECK(p.outcome == DetectOutcome::absent);
    CHECK_FALSE(p.report.has_value());
    CHECK(p.horizon == 10000);
    CHECK(p.max_lag == 2000);
}

TEST_CASE("short horizons are inconclusive rather than absent")
{
    const WalkPath pi = walk_of("pi", 1000, decagon);
    const Detection d = detect_translation(pi, decagon, DetectOptions{2000});
    CHECK(d.outcome == DetectOutcome::inconclusive);
    CHECK(d.max_lag == 333);
    const WalkClass c = classify_walk(parse_number("pi"), pi, decagon, classify_options(2000));
    REQUIRE(std::holds_alternative<NoPeriodFound>(c));
    CHECK(std::get<NoPeriodFound>(c).inconclusive);
}

TEST_CASE("classification examples")
{
    const WalkClass eighth = classify_walk(parse_number("1/8"), walk_of("1/8", 500, decagon), decagon,
                                           classify_options(166));
    REQUIRE(std::holds_alternative<Terminating>(eighth));
    CHECK(std::get<Terminating>(eighth).steps == 3);

    const WalkClass fivenn = classify_walk(parse_number("5/99"), walk_of("5/99", 500, decagon), decagon,
                                           classify_options(166));
    REQUIRE(std::holds_alternative<Periodic>(fivenn));
    const auto& p = std::get<Periodic>(fivenn);
    CHECK(p.preperiod == 0);
    CHECK(p.lag == 2);
    CHECK(p.drift.closed);
    CHECK(p.drift.drift.value == Vec2{0.0, 0.0});
    REQUIRE(p.geometric.has_value());
    CHECK(p.geometric->lag == 2);

    const WalkClass pi = classify_walk(parse_number("pi"), walk_of("pi", 10000, decagon), decagon,
                                       classify_options(2000));
    REQUIRE(std::holds_alternative<NoPeriodFound>(pi));
    CHECK(std::get<NoPeriodFound>(pi).horizon == 10000);
    CHECK(std::get<NoPeriodFound>(pi).max_lag == 2000);
    CHECK_FALSE(std::get<NoPeriodFound>(pi).inconclusive);
}

TEST_CASE("bounding box examples")
{
    const WalkPath origin = build_walk(DigitSeq{}, decagon);
    const BoundingBox a = bounding_box(origin);
    CHECK(a.min == Vec2{0, 0});
    CHECK(a.max == Vec2{0, 0});

    const BoundingBox b = bounding_box(build_walk(DigitSeq{5}, decagon));
    CHECK(b.min == Vec2{-1, 0});
    CHECK(b.max == Vec2{0, 0});

    for (std::size_t n : {2u, 3u, 50u, 999u}) {
        const BoundingBox c = bounding_box(walk_of("5/99", n, decagon));
        CHECK(c.min == Vec2{0, 0});
        CHECK(c.max == Vec2{1, 0});
    }
}

TEST_CASE("soundness: detected translations hold at every point")
{
    testing::Rng rng(71);
    for (int trial = 0; trial < 150; ++trial) {
        const long qd = rng.between(2, 600);
        const long pn = rng.between(1, 5000);
        const std::string text = std::to_string(pn) + "/" + std::to_string(qd);
        for (const VectorMap* map : {&lattice, &decagon}) {
            const WalkPath path = walk_of(text, 2000, *map, true);
            const Detection d = detect_translation(path, *map, DetectOptions{600});
            if (d.outcome != DetectOutcome::found) continue;
            CAPTURE(text);
            CHECK(holds_everywhere(path, *d.report, 1e-6));
            CHECK(d.report->start + 3 * d.report->lag <= path.steps());
        }
    }
}

TEST_CASE("digit periods are verified lags and bound the detector")
{
    testing::Rng rng(72);
    for (int trial = 0; trial < 200; ++trial) {
        const long qd = rng.between(1, 500);
        const long pn = rng.between(0, 10 * qd);
        const Rational r = make_rational(pn, qd);
        const PeriodInfo info = rational_period(r);
        if (info.terminating()) continue;
        const std::size_t n = info.preperiod + 4 * info.period_len + 10;
        const WalkPath path = walk_of(to_string(NumberSpec{r}), n, lattice);
        const Drift drift = drift_vector(info.period_digits, lattice);
        CHECK(holds_everywhere(path, DriftReport{info.period_len, info.preperiod, drift, false}, 0.0));

        const Detection d = detect_translation(path, lattice, DetectOptions{info.period_len});
        REQUIRE(d.outcome == DetectOutcome::found);
        CHECK(d.report->lag <= info.period_len);

        const WalkClass c = classify_walk(r, path, lattice, classify_options(info.period_len));
        REQUIRE(std::holds_alternative<Periodic>(c));
        CHECK(std::get<Periodic>(c).lag == info.period_len);
        CHECK(*std::get<Periodic>(c).drift.drift.exact == *drift.exact);
    }
}

TEST_CASE("linear escape and closed orbits")
{
    testing::Rng rng(73);
    for (int trial = 0; trial < 100; ++trial) {
        const Rational r = make_rational(rng.between(1, 10000), rng.between(2, 300));
        const PeriodInfo info = rational_period(r);
        if (info.terminating()) continue;
        const std::size_t P = info.period_len;
        const WalkPath path = walk_of(to_string(NumberSpec{r}), info.preperiod + 6 * P, lattice);
        const QVec2 D = *drift_vector(info.period_digits, lattice).exact;
        const QVec2 base = path.exact_point(info.preperiod);
        for (std::size_t m = 0; info.preperiod + m * P < path.size(); ++m) {
            const QVec2 at = path.exact_point(info.preperiod + m * P);
            CHECK(at == QVec2{base.x + D.x * static_cast<std::int64_t>(m), base.y + D.y * static_cast<std::int64_t>(m)});
        }
        if (D == q(0, 0)) {
            // The box is fixed once one period past the preperiod is included.
            std::set<std::pair<std::int64_t, std::int64_t>> seen;
            for (std::size_t k = info.preperiod; k < path.size(); ++k) seen.insert({path.xn[k], path.yn[k]});
            CHECK(seen.size() <= P);
            const std::size_t settle = info.preperiod + P + 1;
            WalkPath prefix = path;
            prefix.xs.resize(settle);
            prefix.ys.resize(settle);
            const BoundingBox early = bounding_box(prefix);
            const BoundingBox late = bounding_box(path);
            CHECK(early.min == late.min);
            CHECK(early.max == late.max);
        }
    }
}

TEST_CASE("classification is consistent for every small rational")
{
    std::size_t checked = 0;
    for (long qd = 1; qd <= 120; ++qd)
        for (long pn = 0; pn < qd; ++pn) {
            if (std::gcd(pn, qd) != 1) continue;
            const Rational r = make_rational(pn, qd);
            for (const VectorMap* map : {&lattice, &decagon}) {
                const WalkPath path = walk_of(to_string(NumberSpec{r}), 600, *map);
                CHECK_NOTHROW(classify_walk(r, path, *map, classify_options(200)));
                ++checked;
            }
        }
    CHECK(checked > 0);
}

TEST_CASE("degenerate maps")
{
    const VectorMap same = constant_map();
    const WalkPath pi = walk_of("pi", 3000, same);
    const Detection d = detect_translation(pi, same, DetectOptions{1000});
    REQUIRE(d.outcome == DetectOutcome::found);
    CHECK(d.report->lag == 1);
    CHECK(d.report->start == 0);

    const WalkClass c = classify_walk(parse_number("pi"), pi, same, classify_options(1000));
    REQUIRE(std::holds_alternative<Periodic>(c));
    CHECK(std::get<Periodic>(c).lag == 1);

    // 1/7 keeps its arithmetic lag, the geometric lag is reported alongside.
    const WalkPath seventh = walk_of("1/7", 600, same);
    const WalkClass s = classify_walk(parse_number("1/7"), seventh, same, classify_options(200));
    REQUIRE(std::holds_alternative<Periodic>(s));
    CHECK(std::get<Periodic>(s).lag == 6);
    REQUIRE(std::get<Periodic>(s).geometric.has_value());
    CHECK(std::get<Periodic>(s).geometric->lag == 1);

    // Digits 0 and 5 share a vector: the walk of 5/99 becomes a straight line.
    std::array<QVec2, 10> pairs;
    for (int d = 0; d < 10; ++d) pairs[d] = q(d % 5 + 1, 0);
    const VectorMap folded = VectorMap::exact("folded", pairs);
    const Detection f = detect_translation(walk_of("5/99", 300, folded), folded, DetectOptions{100});
    REQUIRE(f.outcome == DetectOutcome::found);
    CHECK(f.report->lag == 1);
}

TEST_CASE("padding zeros turns a terminating walk into a lag-1 drift")
{
    const WalkPath padded = walk_of("1/8", 300, decagon, true);
    const WalkClass c = classify_walk(parse_number("1/8"), padded, decagon, classify_options(100));
    REQUIRE(std::holds_alternative<Periodic>(c));
    const auto& p = std::get<Periodic>(c);
    CHECK(p.preperiod == 3);
    CHECK(p.lag == 1);
    CHECK(p.drift.drift.value == decagon.vector(0));
    CHECK_FALSE(p.drift.closed);
}

TEST_CASE("leading integer digits shift the preperiod")
{
    DigitStream s(parse_number("22/7"));
    const auto frac = s.take(300).digits;
    DigitSeq lead = integer_part_digits(parse_number("22/7"));
    CHECK(lead == DigitSeq{3});
    lead.insert(lead.end(), frac.begin(), frac.end());
    const WalkPath path = build_walk(lead, lattice);
    ClassifyOptions o = classify_options(100);
    o.leading_digits = 1;
    const WalkClass c = classify_walk(parse_number("22/7"), path, lattice, o);
    REQUIRE(std::holds_alternative<Periodic>(c));
    CHECK(std::get<Periodic>(c).preperiod == 1);
    CHECK(std::get<Periodic>(c).lag == 6);
}

TEST_CASE("step budget yields an inconclusive answer")
{
    const WalkPath pi = walk_of("pi", 10000, decagon);
    DetectOptions o{2000};
    o.step_budget = 5000;
    const Detection d = detect_translation(pi, decagon, o);
    CHECK(d.outcome == DetectOutcome::inconclusive);
    CHECK(d.budget_exhausted);

    ClassifyOptions c = classify_options(2000);
    c.step_budget = 5000;
    const WalkClass w = classify_walk(parse_number("pi"), pi, decagon, c);
    REQUIRE(std::holds_alternative<NoPeriodFound>(w));
    CHECK(std::get<NoPeriodFound>(w).inconclusive);

    // A rational keeps its arithmetic answer when the cross-check runs out of budget.
    const WalkPath seventh = walk_of("1/7", 600, lattice);
    c.max_lag = 200;
    c.step_budget = 10;
    const WalkClass s = classify_walk(parse_number("1/7"), seventh, lattice, c);
    REQUIRE(std::holds_alternative<Periodic>(s));
    CHECK(std::get<Periodic>(s).lag == 6);
}

TEST_CASE("detector agrees under scalar and vector kernels")
{
    const auto before = kernels::active().isa;
    testing::Rng rng(74);
    for (int trial = 0; trial < 60; ++trial) {
        const std::string text = std::to_string(rng.between(1, 999)) + "/" + std::to_string(rng.between(2, 400));
        for (const VectorMap* map : {&lattice, &decagon}) {
            const WalkPath path = walk_of(text, 1500, *map, true);
            std::vector<std::pair<std::size_t, std::size_t>> results;
            for (const auto* table : kernels::available()) {
                kernels::select(table->isa);
                const Detection d = detect_translation(path, *map, DetectOptions{500});
                results.push_back(d.report ? std::pair{d.report->lag, d.report->start} : std::pair{0ul, 0ul});
            }
            for (const auto& r : results) CHECK(r == results.front());
        }
    }
    kernels::select(before);
}
