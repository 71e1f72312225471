#include "gridbasis/textfmt.hpp"

#include <sstream>

namespace gridbasis {

std::string format_point(const Point& p) {
    std::string s = "(";
    for (int i = 0; i < p.dim(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
}

std::string format_point_set(const PointSet& m) {
    std::string s = "{";
    for (size_t i = 0; i < m.points().size(); ++i)
        s += (i ? ", " : "") + format_point(m.points()[i]);
    return s + "}";
}

std::string format_weight_function(const WeightFunction& w) {
    std::string s;
    bool first = true;
    for (size_t i = 0; i < w.values().size(); ++i) {
        const Rat& v = w.values()[i];
        if (v == 0) continue;
        const Rat magnitude = abs(v);
        if (first) {
            if (sgn(v) < 0) s += "-";
            first = false;
        } else {
            s += sgn(v) < 0 ? " - " : " + ";
        }
        if (magnitude != 1) s += rat_to_string(magnitude) + "*";
        s += "1_" + format_point(w.base().points()[i]);
    }
    if (first) s = "0";
    return s;
}

std::string format_verdict(const BasisVerdict& v) {
    std::ostringstream out;
    out << (v.basic ? "basic" : "non-basic") << " (rank " << v.rank << ")";
    if (v.certificate)
        out << "\nannihilation function: " << format_weight_function(*v.certificate);
    return out.str();
}

std::string format_decomposition(const CoordinateDecomposition& dec) {
    std::ostringstream out;
    for (int i = 0; i < dec.shape.dim(); ++i) {
        if (i) out << "\n";
        out << "f" << i + 1 << " = (";
        const auto& table = dec.tables[static_cast<size_t>(i)];
        for (size_t v = 0; v < table.size(); ++v)
            out << (v ? ", " : "") << rat_to_string(table[v]);
        out << ")";
    }
    return out.str();
}

std::string format_decomposition_result(const DecompositionResult& r) {
    if (r.decomposition) return format_decomposition(*r.decomposition);
    return "no decomposition\ncertificate: " +
           format_weight_function(*r.certificate) +
           "\npairing: " + rat_to_string(r.pairing);
}

std::string format_rectangle_term(const RectangleTerm& t, const GridShape& shape) {
    const auto [p, q, r, s] = t.vertices(shape);
    std::string out;
    if (t.coeff != 1) out += t.coeff.get_str() + " * ";
    out += "(1_" + format_point(p) + " - 1_" + format_point(q) + " + 1_" +
           format_point(r) + " - 1_" + format_point(s) + ")";
    return out;
}

std::string format_graph_verdict(const GraphVerdict& v) {
    std::ostringstream out;
    out << (v.basic ? "basic" : "non-basic") << " (rank " << v.rank << ")";
    if (!v.basic) {
        out << "\ndependence:";
        for (const Int& x : v.dependence) out << " " << x.get_str();
        if (!v.component.empty()) {
            out << "\nbipartite component:";
            for (int u : v.component) out << " " << u + 1;
        }
    }
    return out.str();
}

std::string format_named_family(const NamedFamily& fam) {
    std::ostringstream out;
    out << fam.tag << " n=" << fam.n << " d=" << fam.d;
    if (fam.tag == "unbounded") out << " m=" << fam.m;
    if (fam.added_point) out << " point=" << format_point(*fam.added_point);
    out << "\n" << fam.set.size() << " points: " << format_point_set(fam.set);
    if (fam.claimed_annihilation)
        out << "\nannihilation function: "
            << format_weight_function(*fam.claimed_annihilation);
    return out.str();
}

std::string format_conjecture(const ConjectureResult& r) {
    std::ostringstream out;
    out << "sum |f| = " << r.sum_abs.get_str() << ", 2(|M| - n) = "
        << r.rhs.get_str() << ": " << (r.holds ? "holds" : "FAILS");
    return out.str();
}

std::string format_search_report(const SearchReport& r) {
    std::ostringstream out;
    out << r.mode << " search on [" << r.grid.side(0) << "]^" << r.grid.dim();
    if (r.mode != "exhaustive")
        out << " (seed " << r.seed << ", budget " << r.budget << ")";
    for (const SizeReport& s : r.sizes) {
        out << "\nsize " << s.size << ": "
            << (s.realized ? "realized" : "not realized");
        if (s.canonical_count >= 0)
            out << " (" << s.canonical_count << " classes, " << s.raw_count
                << " raw)";
        if (s.witness)
            out << "\n  witness: " << format_point_set(s.witness->set)
                << "\n  annihilation: "
                << format_weight_function(s.witness->annihilation);
        if (s.conjecture_pass >= 0) {
            out << "\n  conjecture: " << s.conjecture_pass << " pass, "
                << s.conjecture_fail << " fail";
            for (const SearchWitness& w : s.counterexamples)
                out << "\n  COUNTEREXAMPLE: " << format_point_set(w.set);
        }
    }
    return out.str();
}

}  // namespace gridbasis
