#include "enscoh/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <random>
#include <string>

namespace enscoh {

std::string_view to_string(SweepFamily f) {
    switch (f) {
        case SweepFamily::Arb2x2Real: return "2x2-real";
        case SweepFamily::Arb2x2Complex: return "2x2-complex";
        case SweepFamily::Arb2x3Real: return "2x3-real";
    }
    return "?";
}

SweepFamily parse_family(std::string_view s) {
    for (auto f : {SweepFamily::Arb2x2Real, SweepFamily::Arb2x2Complex, SweepFamily::Arb2x3Real}) {
        if (s == to_string(f)) return f;
    }
    throw Error("unknown sweep family '" + std::string(s) + "' (expected 2x2-real, 2x2-complex or 2x3-real)");
}

void SweepSpec::validate() const {
    if (samples < 1) throw Error("SweepSpec: samples must be >= 1");
    if (restarts && *restarts < 1) throw Error("SweepSpec: restarts must be >= 1");
}

ProductEnsemble family_ensemble(SweepFamily f, double theta1, double phi1, double theta2, double phi2) {
    switch (f) {
        case SweepFamily::Arb2x2Real: return make_arb_2x2(theta1, theta2, 0.0, 0.0);
        case SweepFamily::Arb2x2Complex: return make_arb_2x2(theta1, theta2, phi1, phi2);
        case SweepFamily::Arb2x3Real: return make_arb_2x3(theta1, phi1, theta2, phi2);
    }
    throw Error("unknown sweep family");
}

SweepRow sweep_row(SweepFamily f, double theta1, double phi1, double theta2, double phi2, const SweepSpec& spec) {
    if (f == SweepFamily::Arb2x2Real) phi1 = phi2 = 0.0;
    const ProductEnsemble e = family_ensemble(f, theta1, phi1, theta2, phi2);
    OptimizerConfig cfg = OptimizerConfig::defaults_for(e.d1(), e.d2());
    if (spec.restarts) cfg.restarts = *spec.restarts;

    SweepRow r{theta1, phi1, theta2, phi2};
    r.c_r = relative_local_coherence(e);
    const CoherenceReport l1 = mec(e, CoherenceMeasure::L1, cfg);
    r.mec_n_l1 = l1.mec_normalized;
    r.cd_l1 = l1.deficit;
    r.mec_n_rel = mec(e, CoherenceMeasure::RelativeEntropy, cfg).mec_normalized;
    r.p_succ = success_probability(e, cfg).p_succ(spec.criterion);
    return r;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    spec.validate();
    // Raw 64-bit draws mapped by hand so the sample stream does not depend
    // on the standard library's distribution implementation.
    std::mt19937_64 rng(spec.seed);
    auto uniform = [&rng](double hi) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 * hi; };
    constexpr double pi = std::numbers::pi;
    std::vector<SweepRow> rows;
    rows.reserve(spec.samples);
    for (std::size_t i = 0; i < spec.samples; ++i) {
        const double t1 = uniform(pi), p1 = uniform(2 * pi), t2 = uniform(pi), p2 = uniform(2 * pi);
        rows.push_back(sweep_row(spec.family, t1, p1, t2, p2, spec));
    }
    return rows;
}

namespace {

std::string fmt9(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v == 0.0 ? 0.0 : v);
    return buf;
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "theta1,phi1,theta2,phi2,c_r,mec_n_l1,mec_n_rel,cd_l1,p_succ\n";
    for (const auto& r : rows) {
        out << fmt9(r.theta1) << ',' << fmt9(r.phi1) << ',' << fmt9(r.theta2) << ',' << fmt9(r.phi2) << ','
            << fmt9(r.c_r) << ',' << fmt9(r.mec_n_l1) << ',' << fmt9(r.mec_n_rel) << ',' << fmt9(r.cd_l1) << ','
            << fmt9(r.p_succ) << '\n';
    }
}

void write_svg(std::ostream& out, const std::vector<SweepRow>& rows, const SweepSpec& spec) {
    struct Panel {
        std::string title;
        double SweepRow::*field;
        const char* color;
    };
    const bool l1 = spec.measure == CoherenceMeasure::L1;
    const Panel panels[] = {
        {l1 ? "MEC^n (l1)" : "MEC^n (rel)", l1 ? &SweepRow::mec_n_l1 : &SweepRow::mec_n_rel, "#1f77b4"},
        {"CD (l1)", &SweepRow::cd_l1, "#2ca02c"},
        {std::string("P_succ (") + std::string(to_string(spec.criterion)) + ")", &SweepRow::p_succ, "#d62728"},
        {l1 ? "MEC^n (rel)" : "MEC^n (l1)", l1 ? &SweepRow::mec_n_rel : &SweepRow::mec_n_l1, "#9467bd"},
    };
    double xmax = 0.0;
    for (const auto& r : rows) xmax = std::max(xmax, r.c_r);
    if (xmax <= 0.0) xmax = 1.0;

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" viewBox=\"0 0 800 600\">\n"
        << "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n"
        << "<text x=\"400\" y=\"18\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
        << to_string(spec.family) << " sweep, " << rows.size() << " samples, x = C_r</text>\n";
    for (int k = 0; k < 4; ++k) {
        const double x0 = 60 + (k % 2) * 390, y0 = 40 + (k / 2) * 280, w = 320, h = 220;
        double ymin = 0.0, ymax = 0.0;
        for (const auto& r : rows) ymax = std::max(ymax, r.*panels[k].field);
        if (ymax <= ymin) ymax = ymin + 1.0;
        out << "<g>\n<rect x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << w << "\" height=\"" << h
            << "\" fill=\"none\" stroke=\"black\"/>\n"
            << "<text x=\"" << x0 + w / 2 << "\" y=\"" << y0 - 6
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << panels[k].title
            << "</text>\n"
            << "<text x=\"" << x0 - 4 << "\" y=\"" << y0 + 10
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">" << fmt9(ymax) << "</text>\n"
            << "<text x=\"" << x0 - 4 << "\" y=\"" << y0 + h
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">0</text>\n"
            << "<text x=\"" << x0 + w << "\" y=\"" << y0 + h + 14
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">" << fmt9(xmax) << "</text>\n";
        for (const auto& r : rows) {
            const double px = x0 + w * r.c_r / xmax;
            const double py = y0 + h - h * (r.*panels[k].field - ymin) / (ymax - ymin);
            char buf[96];
            std::snprintf(buf, sizeof buf, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"2\" fill=\"%s\"/>\n", px, py,
                          panels[k].color);
            out << buf;
        }
        out << "</g>\n";
    }
    out << "</svg>\n";
}

}  // namespace enscoh
