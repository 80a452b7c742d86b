#include <doctest.h>

#include <random>

#include "lens3de/io/synthetic.hpp"
#include "lens3de/selection.hpp"
#include "support.hpp"

using namespace lens3de;
using lens3de::testing::random_unit;

namespace {

StreamlineSet make_set(std::vector<Polyline> lines) {
    StreamlineSet s;
    s.lines = std::move(lines);
    for (std::size_t i = 0; i < s.lines.size(); ++i) s.seed_ids.push_back(static_cast<std::int64_t>(i));
    return s;
}

Polyline straight(const Vec3& through, const Vec3& dir, double half_len = 3.0, int points = 7) {
    Polyline l;
    for (int k = 0; k < points; ++k) l.push_back(through + dir * (-half_len + 2.0 * half_len * k / (points - 1)));
    return l;
}

bool sampled_hit(const Polyline& line, const Ball& ball) {
    for (std::size_t s = 0; s + 1 < line.size(); ++s)
        for (int k = 0; k <= 1000; ++k)
            if (distance(lerp(line[s], line[s + 1], k / 1000.0), ball.center()) <= ball.radius()) return true;
    return false;
}

// Direction from fine subdivision: every sub-piece whose midpoint is inside
// contributes its displacement.
std::optional<Vec3> sampled_direction(const Polyline& line, const Ball& ball) {
    Vec3 sum;
    bool any = false;
    const int n = 4000;
    for (std::size_t s = 0; s + 1 < line.size(); ++s)
        for (int k = 0; k < n; ++k) {
            const Vec3 a = lerp(line[s], line[s + 1], static_cast<double>(k) / n);
            const Vec3 b = lerp(line[s], line[s + 1], static_cast<double>(k + 1) / n);
            if (point_in_ball((a + b) * 0.5, ball)) {
                sum += b - a;
                any = true;
            }
        }
    if (!any || sum.length() == 0.0) return std::nullopt;
    return sum / sum.length();
}

std::vector<Polyline> random_lines(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-2.5, 2.5);
    std::normal_distribution<double> jitter(0.0, 0.15);
    std::vector<Polyline> lines;
    for (int i = 0; i < count; ++i) {
        Vec3 p{u(rng), u(rng), u(rng)};
        const Vec3 d = testing::random_unit(rng);
        Polyline l{p};
        for (int k = 0; k < 7; ++k) {
            p = p + d * 0.6 + Vec3{jitter(rng), jitter(rng), jitter(rng)};
            l.push_back(p);
        }
        lines.push_back(std::move(l));
    }
    return lines;
}

}  // namespace

TEST_CASE("containment basics") {
    const Ball ball({0, 0, 0}, 1.0);
    const auto set = make_set({straight({0, 0, 0}, {1, 0, 0}), straight({0, 3, 0}, {1, 0, 0})});
    const SelectionBuffer sel = select_containment(set, ball);
    CHECK(sel[0]);
    CHECK_FALSE(sel[1]);
    CHECK(sel.count() == 1);
    CHECK(select_containment(StreamlineSet{}, ball).size() == 0);
}

TEST_CASE("containment matches a dense sampling oracle") {
    const auto set = make_set(random_lines(17, 1000));
    const Ball ball({0.2, -0.1, 0.3}, 1.0);
    const SelectionBuffer sel = select_containment(set, ball);
    int mismatches = 0, selected = 0;
    for (std::size_t i = 0; i < set.size(); ++i) {
        mismatches += sel[i] != sampled_hit(set.lines[i], ball);
        selected += sel[i];
    }
    CHECK(mismatches == 0);
    CHECK(selected > 50);
    CHECK(selected < 950);
}

TEST_CASE("containment is monotone in radius") {
    const auto set = make_set(random_lines(23, 300));
    SelectionBuffer prev = select_containment(set, Ball({0, 0, 0}, 0.05));
    for (double r = 0.1; r < 4.0; r += 0.1) {
        const SelectionBuffer now = select_containment(set, Ball({0, 0, 0}, r));
        REQUIRE(prev.subset_of(now));
        prev = now;
    }
}

TEST_CASE("mean tangent") {
    const Ball ball({0, 0, 0}, 0.5);
    const auto t = mean_tangent(straight({0, 0, 0}, {1, 0, 0}), ball);
    REQUIRE(t);
    CHECK(t->x() == doctest::Approx(1.0));
    CHECK_FALSE(mean_tangent(straight({0, 3, 0}, {1, 0, 0}), ball));

    const Polyline corner{{-1, 0, 0}, {0, 0, 0}, {0, 1, 0}};
    const auto c = mean_tangent(corner, ball);
    REQUIRE(c);
    CHECK(c->x() == doctest::Approx(std::sqrt(0.5)));
    CHECK(c->y() == doctest::Approx(std::sqrt(0.5)));
    CHECK(c->z() == doctest::Approx(0.0));

    // Touching the sphere at a single point has no in-ball length.
    CHECK_FALSE(mean_tangent(straight({0, 0.5, 0}, {1, 0, 0}), ball));
}

TEST_CASE("angular filter at the 15 degree boundary") {
    const Ball ball({0, 0, 0}, 1.0);
    const Disk disk{{0, 0, 0}, 1.0, UnitVec3::unit_z()};
    auto at = [](double deg) { return Vec3{std::sin(deg_to_rad(deg)), 0, std::cos(deg_to_rad(deg))}; };
    const auto set = make_set({straight({0, 0, 0}, at(0)), straight({0, 0, 0}, at(14)), straight({0, 0, 0}, at(16)),
                               straight({0, 0, 0}, at(90)), straight({0, 0, 0}, at(180))});
    const SelectionBuffer base = select_containment(set, ball);
    REQUIRE(base.count() == 5);
    const SelectionBuffer sel = select_angular(set, base, disk, 15.0);
    CHECK(sel[0]);
    CHECK(sel[1]);
    CHECK_FALSE(sel[2]);
    CHECK_FALSE(sel[3]);
    CHECK_FALSE(sel[4]);  // signed: opposite direction is rejected

    CHECK_THROWS_AS(select_angular(set, base, disk, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(select_angular(set, base, disk, 91.0), std::invalid_argument);
    CHECK_THROWS_AS(select_angular(set, SelectionBuffer{{1}}, disk, 15.0), std::invalid_argument);
}

TEST_CASE("angular filter matches a subdivision oracle") {
    const auto set = make_set(random_lines(29, 1000));
    const Ball ball({0.1, 0.2, -0.1}, 1.2);
    const UnitVec3 normal = UnitVec3::normalize({0.3, -0.2, 1.0});
    const Disk disk{ball.center(), ball.radius(), normal};
    const SelectionBuffer base = select_containment(set, ball);
    const SelectionBuffer sel = select_angular(set, base, disk, 15.0);
    CHECK(sel.subset_of(base));
    int mismatches = 0, near_boundary = 0;
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (!base[i]) {
            REQUIRE_FALSE(sel[i]);
            continue;
        }
        const auto d = sampled_direction(set.lines[i], ball);
        const bool expect = d && angle_deg(*d, normal) <= 15.0;
        if (d && std::abs(angle_deg(*d, normal) - 15.0) < 0.05) ++near_boundary;
        mismatches += sel[i] != expect;
    }
    CHECK(mismatches == 0);
    CHECK(near_boundary == 0);
}

TEST_CASE("angular filter never adds lines and is loose at 90 degrees for forward lines") {
    std::mt19937_64 rng(41);
    std::vector<Polyline> lines;
    const UnitVec3 normal = UnitVec3::unit_x();
    for (int i = 0; i < 300; ++i) {
        Vec3 d = random_unit(rng);
        if (d.x < 0) d.x = -d.x;
        if (d.x < 1e-3) d.x = 1e-3;
        lines.push_back(straight(Vec3{0.2, 0.1, -0.3} + random_unit(rng) * 0.5, d));
    }
    const auto set = make_set(lines);
    const Ball ball({0, 0, 0}, 1.0);
    const SelectionBuffer base = select_containment(set, ball);
    const SelectionBuffer loose = select_angular(set, base, {ball.center(), 1.0, normal}, 90.0);
    CHECK(loose == base);
    for (double tol : {60.0, 30.0, 15.0, 5.0})
        CHECK(select_angular(set, base, {ball.center(), 1.0, normal}, tol).subset_of(base));
}

TEST_CASE("selection is equivariant under rigid motion") {
    const auto lines = random_lines(53, 400);
    const double a = 1.1;
    auto rot = [a](const Vec3& p) {
        return Vec3{p.x, std::cos(a) * p.y - std::sin(a) * p.z, std::sin(a) * p.y + std::cos(a) * p.z};
    };
    const Vec3 shift{-4, 2, 7};
    std::vector<Polyline> moved;
    for (const auto& l : lines) {
        Polyline m;
        for (const auto& p : l) m.push_back(rot(p) + shift);
        moved.push_back(m);
    }
    const Lens3De lens(Ball({0.3, 0.1, 0.0}, 1.3), UnitVec3::normalize({1, 1, 0}), 25.0);
    const Lens3De lens_moved(Ball(rot(lens.ball().center()) + shift, 1.3), UnitVec3::normalize(rot({1, 1, 0})), 25.0);
    CHECK(select_with_lens(make_set(lines), lens) == select_with_lens(make_set(moved), lens_moved));
}

TEST_CASE("select_with_lens applies the angular filter only with a disk") {
    const auto set = make_set({straight({0, 0, 0}, {1, 0, 0}), straight({0, 0, 0}, {0, 1, 0})});
    const Ball ball({0, 0, 0}, 1.0);
    CHECK(select_with_lens(set, Lens3De(ball)).count() == 2);
    const SelectionBuffer filtered = select_with_lens(set, Lens3De(ball, UnitVec3::unit_x()));
    CHECK(filtered[0]);
    CHECK_FALSE(filtered[1]);
}

TEST_CASE("seed ids come out ascending") {
    StreamlineSet set = make_set({straight({0, 0, 0}, {1, 0, 0}), straight({0, 0.1, 0}, {1, 0, 0}),
                                  straight({0, 9, 0}, {1, 0, 0})});
    set.seed_ids = {42, 7, 13};
    const SelectionBuffer sel = select_containment(set, Ball({0, 0, 0}, 1.0));
    CHECK(selected_seed_ids(set, sel) == std::vector<std::int64_t>{7, 42});
}

TEST_CASE("synthetic bundle: an aligned lens picks exactly the axial lines") {
    const SyntheticScene syn = generate_synthetic_scene({4000, 600, 7, 64});
    const double s = 0.2;
    const Lens3De lens(Ball(TubeShape::axis_point(s), 1.2), TubeShape::axis_tangent(s), 15.0);
    const SelectionBuffer sel = select_with_lens(syn.lines, lens);
    std::vector<std::int64_t> axial;
    for (std::size_t i = 0; i < syn.lines.size(); ++i)
        if (syn.line_kinds[i] == LineKind::Axial) axial.push_back(syn.lines.seed_ids[i]);
    CHECK(selected_seed_ids(syn.lines, sel) == axial);
    CHECK(axial.size() > 250);
}
