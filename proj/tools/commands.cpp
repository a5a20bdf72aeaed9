/*
 * Copyright 2026 The drinfeld-heights Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "commands.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "drinfeld/equidist.hpp"
#include "drinfeld/factor.hpp"
#include "drinfeld/parse.hpp"
#include "drinfeld/schinzel.hpp"
#include "drinfeld/siegel.hpp"

namespace drinfeld::cli {

using Json = nlohmann::ordered_json;

namespace {

/// A plain table printed with aligned columns or as CSV.
class Table {
public:
    explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}
    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    void print(std::ostream& out, Format fmt) const
    {
        if (fmt == Format::Csv) {
            print_csv_row(out, header_);
            for (const auto& r : rows_) print_csv_row(out, r);
            return;
        }
        std::vector<std::size_t> width(header_.size());
        for (std::size_t i = 0; i < header_.size(); ++i) width[i] = header_[i].size();
        for (const auto& r : rows_)
            for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
        auto line = [&](const std::vector<std::string>& r) {
            for (std::size_t i = 0; i < r.size(); ++i) {
                out << (i ? "  " : "") << r[i];
                if (i + 1 < r.size()) out << std::string(width[i] - r[i].size(), ' ');
            }
            out << '\n';
        };
        line(header_);
        for (const auto& r : rows_) line(r);
    }

private:
    static void print_csv_row(std::ostream& out, const std::vector<std::string>& r)
    {
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i) out << ',';
            const bool quote = r[i].find_first_of(",\"") != std::string::npos;
            if (!quote) {
                out << r[i];
                continue;
            }
            out << '"';
            for (char c : r[i]) out << (c == '"' ? "\"\"" : std::string(1, c));
            out << '"';
        }
        out << '\n';
    }

    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Json log_units_json(const LogUnits& x)
{
    return Json{{"value", x.to_string()}, {"num", x.numerator().get_str()}, {"den", x.denominator().get_str()}};
}

Json local_json(const LocalHeight& h)
{
    Json j;
    j["place"] = h.place.to_string();
    j["value"] = log_units_json(h.value);
    j["certified"] = h.certified;
    j["reason"] = to_string(h.reason);
    j["escape_index"] = h.escape_index ? Json(*h.escape_index) : Json(nullptr);
    j["iterations"] = h.n_used;
    j["precision_retries"] = h.precision_retries;
    j["exact_fallback"] = h.exact_fallback;
    if (!h.diagnostic.empty()) j["diagnostic"] = h.diagnostic;
    return j;
}

struct Setup {
    FieldPtr F;
    DrinfeldModule M;
};

Setup load_module(const RunConfig& cfg)
{
    FieldPtr F = cfg.field();
    DrinfeldModule M = cfg.module(F);
    return {F, std::move(M)};
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

}  // namespace

int cmd_height(const RunConfig& cfg, Format fmt, std::ostream& out)
{
    const auto [F, M] = load_module(cfg);
    const RatFunc beta = cfg.ratfunc(F, "beta");
    const HeightOptions opts = cfg.height_options();
    const TorsionResult tr = torsion_order(M, beta, static_cast<unsigned>(cfg.uint("cap", 32)), opts);
    const GlobalHeight& g = tr.height;

    if (fmt == Format::Json) {
        Json j;
        j["command"] = "height";
        j["module"] = M.to_string();
        j["beta"] = beta.to_string();
        j["height"] = log_units_json(g.value);
        j["certified"] = g.certified;
        j["torsion"] = to_string(tr.kind);
        j["order"] = tr.order ? Json(tr.order->to_string()) : Json(nullptr);
        Json locals = Json::array();
        for (const LocalHeight& h : g.locals) locals.push_back(local_json(h));
        j["locals"] = locals;
        print_json(out, j);
    } else {
        if (fmt == Format::Human) {
            out << "module   " << M.to_string() << '\n';
            out << "beta     " << beta.to_string() << '\n';
            out << "height   " << g.value.to_string() << (g.certified ? "" : " (uncertified)") << '\n';
            out << "torsion  " << to_string(tr.kind);
            if (tr.order) out << ", order " << tr.order->to_string();
            out << "\n\n";
        }
        Table t({"place", "local_height", "certified", "reason", "escape_index", "iterations", "retries"});
        for (const LocalHeight& h : g.locals)
            t.add({h.place.to_string(), h.value.to_string(), yes_no(h.certified), to_string(h.reason),
                   h.escape_index ? std::to_string(*h.escape_index) : "-", std::to_string(h.n_used),
                   std::to_string(h.precision_retries)});
        t.print(out, fmt);
    }
    return g.certified ? kSuccess : kUncertified;
}

int cmd_torsion_order(const RunConfig& cfg, Format fmt, std::ostream& out)
{
    const auto [F, M] = load_module(cfg);
    const RatFunc beta = cfg.ratfunc(F, "beta");
    const TorsionResult tr = torsion_order(M, beta, static_cast<unsigned>(cfg.uint("cap", 32)), cfg.height_options());
    if (fmt == Format::Json) {
        Json j;
        j["command"] = "torsion-order";
        j["beta"] = beta.to_string();
        j["kind"] = to_string(tr.kind);
        j["order"] = tr.order ? Json(tr.order->to_string()) : Json(nullptr);
        j["height"] = log_units_json(tr.height.value);
        j["height_certified"] = tr.height.certified;
        j["steps"] = tr.steps;
        if (!tr.diagnostic.empty()) j["diagnostic"] = tr.diagnostic;
        print_json(out, j);
    } else {
        Table t({"beta", "kind", "order", "height", "steps"});
        t.add({beta.to_string(), to_string(tr.kind), tr.order ? tr.order->to_string() : "-", tr.height.value.to_string(),
               std::to_string(tr.steps)});
        t.print(out, fmt);
    }
    return tr.kind == TorsionResult::Kind::Undecided ? kUncertified : kSuccess;
}

int cmd_average(const RunConfig& cfg, Format fmt, std::ostream& out)
{
    const auto [F, M] = load_module(cfg);
    const RatFunc beta = cfg.ratfunc(F, "beta");
    std::vector<Place> places = cfg.places(F, "places");
    if (!cfg.has("places")) {
        places = height_support(M, beta);
        for (const Place& v : support(M.a_d(), M.seed())) places.push_back(v);
        places.push_back(Place::infinity(F));
        std::sort(places.begin(), places.end());
        places.erase(std::unique(places.begin(), places.end()), places.end());
    }
    TableOptions opts;
    opts.heights = cfg.height_options();
    opts.zero_sums = cfg.flag("zero_sums", true);
    opts.workers = cfg.workers();
    const auto deg_max = static_cast<unsigned>(cfg.uint("deg_max", 4));
    const ConvergenceTable table = convergence_table(M, beta, places, deg_max, opts);
    const auto fit = static_cast<unsigned>(cfg.uint("fit_degree", 2));
    const std::vector<GapLaw> laws = fit_gap_law(M, table, fit, fit + 1, deg_max);
    bool certified = table.torsion != TorsionResult::Kind::Undecided;
    for (const AverageRow& r : table.rows) certified = certified && r.target_certified;

    if (fmt == Format::Json) {
        Json j;
        j["command"] = "average";
        j["beta"] = beta.to_string();
        j["torsion"] = to_string(table.torsion);
        j["order"] = table.order ? Json(table.order->to_string()) : Json(nullptr);
        j["height"] = log_units_json(table.height.value);
        Json rows = Json::array();
        for (const AverageRow& r : table.rows)
            rows.push_back({{"Q", r.Q.to_string()},
                            {"place", r.place.to_string()},
                            {"average", r.average.to_string()},
                            {"target", r.target.to_string()},
                            {"gap", r.gap.to_string()},
                            {"annihilated", r.annihilated},
                            {"target_certified", r.target_certified}});
        j["rows"] = rows;
        Json sums = Json::array();
        for (const ZeroSumRow& z : table.zero_sums) sums.push_back({{"Q", z.Q.to_string()}, {"sum", z.sum.to_string()}});
        j["fixed_q_sums"] = sums;
        Json gl = Json::array();
        for (const GapLaw& law : laws)
            gl.push_back({{"place", law.place.to_string()},
                          {"C", law.constant.to_string()},
                          {"worst", law.worst.to_string()},
                          {"violations", law.violations.size()}});
        j["gap_law"] = gl;
        print_json(out, j);
    } else {
        if (fmt == Format::Human) {
            out << "beta " << beta.to_string() << ", " << to_string(table.torsion);
            if (table.order) out << " of order " << table.order->to_string();
            out << ", height " << table.height.value.to_string() << "\n\n";
        }
        Table t({"Q", "place", "average", "target", "gap", "annihilated"});
        for (const AverageRow& r : table.rows)
            t.add({r.Q.to_string(), r.place.to_string(), r.average.to_string(), r.target.to_string(), r.gap.to_string(),
                   yes_no(r.annihilated)});
        t.print(out, fmt);
        if (fmt == Format::Human) {
            out << '\n';
            const auto nonzero = std::count_if(table.zero_sums.begin(), table.zero_sums.end(),
                                               [](const ZeroSumRow& z) { return !z.sum.is_zero(); });
            if (opts.zero_sums)
                out << "fixed-Q sums over all places: " << table.zero_sums.size() - static_cast<std::size_t>(nonzero)
                    << " of " << table.zero_sums.size() << " are 0\n";
            for (const GapLaw& law : laws)
                out << "gap law at " << law.place.to_string() << ": C = " << law.constant.to_string()
                    << " (deg Q <= " << fit << "), worst scaled gap " << law.worst.to_string() << ", "
                    << law.violations.size() << " violations\n";
        }
    }
    return certified ? kSuccess : kUncertified;
}

int cmd_siegel(const RunConfig& cfg, Format fmt, std::ostream& out)
{
    const auto [F, M] = load_module(cfg);
    const RatFunc beta = cfg.ratfunc(F, "beta");
    const RatFunc alpha = cfg.has("alpha") ? cfg.ratfunc(F, "alpha") : RatFunc(F);
    const std::vector<Place> S = cfg.places(F, "S");
    SiegelOptions opts;
    opts.integrality.strict = cfg.flag("strict", false);
    opts.integrality.seed = cfg.seed();
    opts.heights = cfg.height_options();
    opts.workers = cfg.workers();
    const auto deg_max = static_cast<unsigned>(cfg.uint("deg_max", 6));
    const SiegelScan scan = scan_siegel(M, beta, alpha, S, deg_max, opts);

    if (fmt == Format::Json) {
        Json j;
        j["command"] = "siegel-scan";
        j["beta"] = beta.to_string();
        j["alpha"] = alpha.to_string();
        j["alpha_order"] = scan.alpha_order ? Json(scan.alpha_order->to_string()) : Json(nullptr);
        Json s = Json::array();
        for (const Place& v : S) s.push_back(v.to_string());
        j["S"] = s;
        j["note"] = scan.note;
        j["beta_undecided"] = scan.beta_undecided;
        Json per = Json::array();
        for (unsigned k = 1; k <= deg_max; ++k)
            per.push_back({{"degree", k}, {"hits", scan.hits_per_degree[k]}, {"scanned", scan.scanned_per_degree[k]}});
        j["per_degree"] = per;
        Json hits = Json::array();
        for (const IntegralityReport& r : scan.hits) {
            Json checked = Json::array();
            for (const Place& v : r.checked) checked.push_back(v.to_string());
            hits.push_back({{"Q", r.Q->to_string()}, {"point", r.point.to_string()}, {"checked_places", checked},
                            {"strict_agrees", !r.variants_disagree}});
        }
        j["hits"] = hits;
        j["largest_hit_degree"] = scan.largest_hit_degree ? Json(*scan.largest_hit_degree) : Json(nullptr);
        print_json(out, j);
    } else {
        if (fmt == Format::Human) {
            out << "beta " << beta.to_string() << ", alpha " << alpha.to_string();
            if (scan.alpha_order) out << " (order " << scan.alpha_order->to_string() << ")";
            out << "\nnote: " << scan.note << "\n\n";
        }
        Table t({"degree", "hits", "scanned"});
        for (unsigned k = 1; k <= deg_max; ++k)
            t.add({std::to_string(k), std::to_string(scan.hits_per_degree[k]), std::to_string(scan.scanned_per_degree[k])});
        t.print(out, fmt);
        if (fmt == Format::Human) {
            for (const IntegralityReport& r : scan.hits) out << "hit Q = " << r.Q->to_string() << ": " << r.point.to_string() << '\n';
            out << "largest hit degree: " << (scan.largest_hit_degree ? std::to_string(*scan.largest_hit_degree) : "none")
                << '\n';
        }
    }
    return scan.beta_undecided ? kUncertified : kSuccess;
}

int cmd_schinzel(const RunConfig& cfg, Format fmt, std::ostream& out)
{
    const auto [F, M] = load_module(cfg);
    const RatFunc beta = cfg.ratfunc(F, "beta");
    const std::vector<Place> S = cfg.places(F, "S");
    SchinzelOptions opts;
    opts.heights = cfg.height_options();
    opts.workers = cfg.workers();
    opts.exact_search = cfg.flag("exact", false);
    const auto qdeg = static_cast<unsigned>(cfg.uint("qdeg_max", 4));
    const auto pdeg = static_cast<unsigned>(cfg.uint("place_deg_max", 8));
    const SchinzelFrontier fr = schinzel_frontier(M, beta, S, qdeg, pdeg, opts);

    if (fmt == Format::Json) {
        // JSON lines: one record per primitive hit, then a summary record.
        for (const FrontierRow& row : fr.rows) {
            if (!row.first_hit) continue;
            const PrimitiveHit& h = *row.first_hit;
            Json ev = Json::array();
            for (const DivisorValuation& d : h.evidence.divisors) ev.push_back({{"P", d.P.to_string()}, {"log_abs", d.log_abs.to_string()}});
            Json j{{"type", "hit"},
                   {"Q", h.Q.to_string()},
                   {"place", h.place.to_string()},
                   {"residue_order", h.residue_order.to_string()},
                   {"log_abs_phi_Q", h.evidence.log_phi_Q ? Json(h.evidence.log_phi_Q->to_string()) : Json(nullptr)},
                   {"divisors", ev},
                   {"places_with_hits", row.hits}};
            out << j.dump() << '\n';
        }
        Json summary{{"type", "summary"},
                     {"empirical_N", fr.empirical_N},
                     {"exact_N", fr.exact_N ? Json(*fr.exact_N) : Json(nullptr)},
                     {"pairs_checked", fr.pairs_checked},
                     {"mismatches", 0},
                     {"admissible_places", fr.admissible.size()},
                     {"beta_undecided", fr.beta_undecided}};
        out << summary.dump() << '\n';
    } else {
        std::vector<std::string> header{"Q", "hits", "first_place"};
        if (opts.exact_search) {
            header.push_back("exact_hits");
            header.push_back("smallest_exact");
        }
        Table t(header);
        for (const FrontierRow& row : fr.rows) {
            std::vector<std::string> r{row.Q.to_string(), std::to_string(row.hits),
                                       row.first_hit ? row.first_hit->place.to_string() : "-"};
            if (opts.exact_search) {
                r.push_back(std::to_string(row.exact_hits.value_or(0)));
                r.push_back(row.smallest_exact ? row.smallest_exact->to_string() : "-");
            }
            t.add(r);
        }
        t.print(out, fmt);
        if (fmt == Format::Human) {
            out << "\nempirical N (places of degree <= " << pdeg << "): " << fr.empirical_N << '\n';
            if (fr.exact_N) out << "exact N (places of any degree): " << *fr.exact_N << '\n';
            out << "characterization checks: " << fr.pairs_checked << " pairs, 0 mismatches\n";
        }
    }
    return fr.beta_undecided ? kUncertified : kSuccess;
}

int cmd_reduce(const RunConfig& cfg, Format fmt, std::ostream& out)
{
    const auto [F, M] = load_module(cfg);
    std::vector<Place> places = cfg.has("place") ? std::vector<Place>{cfg.place(F, "place")} : cfg.places(F, "places");
    if (places.empty() && !cfg.has("places")) places = finite_places_up_to(F, static_cast<unsigned>(cfg.uint("place_deg_max", 2)));
    const bool with_beta = cfg.has("beta");
    const RatFunc beta = with_beta ? cfg.ratfunc(F, "beta") : RatFunc(F);

    Json rows = Json::array();
    Table t({"place", "good", "reduction", "beta_bar", "order"});
    for (const Place& v : places) {
        if (v.is_infinite()) throw DomainError("reduction is only defined at finite places");
        const bool good = good_reduction(M, v);
        std::string red = "-", bbar = "-", order = "-";
        if (good) {
            const ResidueModule R = reduce(M, v);
            red = R.to_string();
            if (with_beta && !(beta.den() % v.poly()).is_zero()) {
                const Poly b = R.reduce(beta);
                bbar = b.to_string();
                order = residue_order(R, b).to_string();
            }
        }
        t.add({v.to_string(), yes_no(good), red, bbar, order});
        rows.push_back({{"place", v.to_string()}, {"good", good}, {"reduction", red}, {"beta_bar", bbar}, {"order", order}});
    }
    if (fmt == Format::Json) {
        print_json(out, Json{{"command", "reduce"}, {"module", M.to_string()}, {"places", rows}});
    } else {
        t.print(out, fmt);
    }
    return kSuccess;
}

int cmd_factor(const RunConfig& cfg, Format fmt, std::ostream& out)
{
    const FieldPtr F = cfg.field();
    const Poly f = cfg.poly(F, "poly");
    if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
    const Factorization fac = factor(f, cfg.seed());
    if (fmt == Format::Json) {
        Json fs = Json::array();
        for (const auto& [P, m] : fac.factors) fs.push_back({{"factor", P.to_string()}, {"multiplicity", m}});
        print_json(out, Json{{"command", "factor"}, {"poly", f.to_string()}, {"lead", F->format(fac.lead)}, {"factors", fs}});
    } else {
        if (fmt == Format::Human) out << f.to_string() << " = " << F->format(fac.lead) << " * product of\n";
        Table t({"factor", "multiplicity"});
        for (const auto& [P, m] : fac.factors) t.add({P.to_string(), std::to_string(m)});
        t.print(out, fmt);
    }
    return kSuccess;
}

int run_command(const std::string& name, const RunConfig& cfg, Format fmt, std::ostream& out, std::ostream& err)
{
    try {
        if (name == "height") return cmd_height(cfg, fmt, out);
        if (name == "torsion-order") return cmd_torsion_order(cfg, fmt, out);
        if (name == "average") return cmd_average(cfg, fmt, out);
        if (name == "siegel-scan") return cmd_siegel(cfg, fmt, out);
        if (name == "schinzel-scan") return cmd_schinzel(cfg, fmt, out);
        if (name == "reduce") return cmd_reduce(cfg, fmt, out);
        if (name == "factor") return cmd_factor(cfg, fmt, out);
        err << "error: unknown command " << name << '\n';
        return kUsageError;
    } catch (const CharacterizationMismatch& e) {
        err << "internal assertion failed: " << e.what() << '\n';
        return kInternalMismatch;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kUsageError;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kUsageError;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kUsageError;
    }
}

}  // namespace drinfeld::cli
