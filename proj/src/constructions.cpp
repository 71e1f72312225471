#include "gridbasis/constructions.hpp"

#include <string>
#include <vector>

#include "gridbasis/errors.hpp"

namespace gridbasis {

namespace {

Point axis_point(int d, int axis, int value) {
    Point p(std::vector<int>(static_cast<size_t>(d), 1));
    p.coords[static_cast<size_t>(axis)] = value;
    return p;
}

Point constant_point(int d, int value) {
    return Point(std::vector<int>(static_cast<size_t>(d), value));
}

}  // namespace

NamedFamily cross_set(int n, int d) {
    const GridShape shape = GridShape::uniform(d, n);
    std::vector<Point> pts{constant_point(d, 1)};
    for (int axis = 0; axis < d; ++axis)
        for (int k = 2; k <= n; ++k) pts.push_back(axis_point(d, axis, k));
    NamedFamily fam;
    fam.tag = "cross";
    fam.n = n;
    fam.d = d;
    fam.set = PointSet(shape, std::move(pts));
    return fam;
}

NamedFamily staircase_set(int n, int d) {
    if (n < 2) throw ValueError("staircase needs n >= 2");
    if (d < 2) throw ValueError("staircase needs d >= 2");
    const GridShape shape = GridShape::uniform(d, n);
    std::vector<std::pair<Point, Rat>> pairs;
    for (int k = 1; k <= n - 1; ++k) {
        Point diag = constant_point(d, k);
        Point step = diag;
        step.coords[0] = k + 1;
        pairs.emplace_back(std::move(diag), Rat(1));
        pairs.emplace_back(std::move(step), Rat(-1));
    }
    pairs.emplace_back(constant_point(d, n), Rat(1));
    Point back = constant_point(d, n);
    back.coords[0] = 1;
    pairs.emplace_back(std::move(back), Rat(-1));

    NamedFamily fam;
    fam.tag = "staircase";
    fam.n = n;
    fam.d = d;
    fam.claimed_annihilation = weight_from_pairs(shape, std::move(pairs));
    fam.set = fam.claimed_annihilation->base();
    return fam;
}

NamedFamily cross_plus_point(int n, int d, const Point& x) {
    if (d < 2) throw ValueError("cross_plus_point needs d >= 2");
    const GridShape shape = GridShape::uniform(d, n);
    if (x.dim() != d) throw ValueError("added point has the wrong dimension");
    for (int i = 0; i < d; ++i) {
        if (x[i] <= 1)
            throw ValueError("added point must have every coordinate above 1 "
                             "(coordinate " +
                             std::to_string(i + 1) + " is " +
                             std::to_string(x[i]) + ")");
        if (x[i] > n) throw ValueError("added point outside the grid");
    }

    NamedFamily fam = cross_set(n, d);
    std::vector<Point> pts = fam.set.points();
    pts.push_back(x);
    fam.tag = "cross_plus_point";
    fam.added_point = x;
    fam.set = PointSet(shape, std::move(pts));

    std::vector<std::pair<Point, Rat>> pairs;
    pairs.emplace_back(constant_point(d, 1), Rat(d - 1));
    pairs.emplace_back(x, Rat(1));
    for (int i = 0; i < d; ++i)
        pairs.emplace_back(axis_point(d, i, x[i]), Rat(-1));
    WeightFunction on_support = weight_from_pairs(shape, std::move(pairs));
    // Extend by zero to the full family so the values align with the set.
    std::vector<Rat> values;
    values.reserve(fam.set.points().size());
    for (const Point& p : fam.set.points())
        values.push_back(on_support.value_or_zero(p));
    fam.claimed_annihilation = WeightFunction(fam.set, std::move(values));
    return fam;
}

NamedFamily unbounded_family(int m) {
    if (m < 1) throw ValueError("unbounded_family needs m >= 1");
    // Value blocks a_k = k, b_k = m+k, c_k = 2m+k and the two hub values
    // D = 3m+1, E = 3m+2 make the smallest grid, n = 3m+2.
    const int n = 3 * m + 2;
    const int dv = 3 * m + 1;
    const int ev = 3 * m + 2;
    const GridShape shape = GridShape::uniform(3, n);
    auto a = [&](int k) { return (k - 1) % m + 1; };
    auto b = [&](int k) { return m + (k - 1) % m + 1; };
    auto c = [&](int k) { return 2 * m + (k - 1) % m + 1; };

    std::vector<std::pair<Point, Rat>> pairs;
    for (int k = 1; k <= m; ++k) {
        pairs.emplace_back(Point{dv, a(k), a(k)}, Rat(1));
        pairs.emplace_back(Point{b(k), dv, b(k)}, Rat(1));
        pairs.emplace_back(Point{c(k), c(k), dv}, Rat(1));
        pairs.emplace_back(Point{ev, a(k), a(k + 1)}, Rat(-1));
        pairs.emplace_back(Point{b(k), ev, b(k + 1)}, Rat(-1));
        pairs.emplace_back(Point{c(k), c(k + 1), ev}, Rat(-1));
    }
    pairs.emplace_back(Point{dv, dv, dv}, Rat(-m));
    pairs.emplace_back(Point{ev, ev, ev}, Rat(m));

    NamedFamily fam;
    fam.tag = "unbounded";
    fam.n = n;
    fam.d = 3;
    fam.m = m;
    fam.claimed_annihilation = weight_from_pairs(shape, std::move(pairs));
    fam.set = fam.claimed_annihilation->base();
    return fam;
}

}  // namespace gridbasis
