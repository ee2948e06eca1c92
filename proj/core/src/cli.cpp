#include "zonalg/cli.hpp"

#include <algorithm>
#include <json.hpp>
#include <map>
#include <sstream>

#include "zonalg/errors.hpp"
#include "zonalg/geometry.hpp"
#include "zonalg/ideals.hpp"
#include "zonalg/matroid.hpp"
#include "zonalg/mpoly.hpp"
#include "zonalg/parking.hpp"
#include "zonalg/spaces.hpp"

namespace zonalg {

using json = nlohmann::ordered_json;

namespace {

const Int kJsonIntCap = (Int(1) << 53) - 1;

json jint(const Int& v) {
    if (v <= kJsonIntCap && v >= -kJsonIntCap) return v.convert_to<long long>();
    return v.str();
}

json jrat(const Rat& r) { return r.str(); }

json jintvec(const IntVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(jint(x));
    return a;
}

json jratvec(const RatVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(jrat(x));
    return a;
}

json jsubset(const Subset& s) {
    json a = json::array();
    for (int i : s) a.push_back(i);
    return a;
}

json jsubsets(const std::vector<Subset>& ss) {
    json a = json::array();
    for (const auto& s : ss) a.push_back(jsubset(s));
    return a;
}

json jcounts(const std::vector<std::size_t>& h) {
    json a = json::array();
    for (std::size_t v : h) a.push_back(v);
    return a;
}

json jpoints(const PointSet& pts) {
    json a = json::array();
    for (const auto& p : pts) a.push_back(jratvec(p));
    return a;
}

json jspace(const GradedPolySpace& s) {
    json basis = json::array();
    for (std::size_t d = 0; d < s.comp.size(); ++d)
        for (const auto& p : s.comp[d]) basis.push_back(p.render());
    return json{{"h", jcounts(s.hilbert())}, {"dim", s.dim()}, {"basis", basis}};
}

json jgens_report(const IdealGens& g) {
    json gens = json::array();
    for (const auto& p : g.gens) gens.push_back(p.render());
    json out{{"count", g.gens.size()}, {"generators", gens}};
    if (!g.long_sets.empty()) out["longSets"] = jsubsets(g.long_sets);
    return out;
}

std::string render_text(const json& j, int indent = 0) {
    std::ostringstream os;
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_object() || (v.is_array() && !v.empty() && v.front().is_structured())) {
                os << pad << k << ":\n" << render_text(v, indent + 1);
            } else {
                os << pad << k << ": " << v.dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_structured())
                os << pad << "-\n" << render_text(v, indent + 1);
            else
                os << pad << "- " << v.dump() << "\n";
        }
    } else {
        os << pad << j.dump() << "\n";
    }
    return os.str();
}

}  // namespace

JobSpec parse_input(const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError("empty input");
    JobSpec spec;
    if (text[first] != '{') {
        std::istringstream is(text);
        std::string line;
        while (std::getline(is, line)) {
            std::istringstream ls(line);
            std::vector<long long> row;
            long long v;
            while (ls >> v) row.push_back(v);
            if (!ls.eof()) throw ParseError("matrix rows must be integers");
            if (!row.empty()) spec.matrix.push_back(std::move(row));
        }
        if (spec.matrix.empty()) throw ParseError("no matrix rows");
        return spec;
    }
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad json: ") + e.what());
    }
    try {
        if (j.contains("matrix"))
            spec.matrix = j["matrix"].get<std::vector<std::vector<long long>>>();
        if (j.contains("order")) spec.order = j["order"].get<std::vector<int>>();
        if (j.contains("b0"))
            spec.b0 = j["b0"].get<std::vector<std::vector<long long>>>();
        if (j.contains("points")) {
            std::vector<std::vector<std::string>> pts;
            for (const auto& row : j["points"]) {
                std::vector<std::string> p;
                for (const auto& c : row)
                    p.push_back(c.is_string() ? c.get<std::string>() : c.dump());
                pts.push_back(std::move(p));
            }
            spec.points = std::move(pts);
        }
        if (j.contains("n")) spec.graph_n = j["n"].get<std::size_t>();
        if (j.contains("seed")) spec.seed = j["seed"].get<unsigned>();
        if (j.contains("degcap")) spec.degcap = j["degcap"].get<int>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad field: ") + e.what());
    }
    return spec;
}

std::string render(const JobSpec& spec) {
    json j;
    if (!spec.matrix.empty()) j["matrix"] = spec.matrix;
    if (spec.order) j["order"] = *spec.order;
    if (spec.b0) j["b0"] = *spec.b0;
    if (spec.points) j["points"] = *spec.points;
    if (spec.graph_n) j["n"] = *spec.graph_n;
    if (spec.seed != 0) j["seed"] = spec.seed;
    if (spec.degcap >= 0) j["degcap"] = spec.degcap;
    return j.dump();
}

GroundSet ground_of(const JobSpec& spec) {
    if (spec.matrix.empty()) throw ParseError("a matrix is required for this command");
    GroundSet X = GroundSet::from_rows(spec.matrix);
    if (spec.order) X = X.permuted(*spec.order);
    return X;
}

namespace {

ExternalFrame frame_of(const JobSpec& spec, const GroundSet& X) {
    if (!spec.b0) return moment_frame(X);
    if (spec.b0->size() != X.dim()) throw ParseError("b0 needs one column per dimension");
    ExternalFrame f;
    for (const auto& col : *spec.b0) {
        if (col.size() != X.dim()) throw ParseError("b0 column length");
        IntVec c;
        for (long long v : col) c.push_back(Int(v));
        f.basis.push_back(std::move(c));
    }
    f.general_position = frame_general_position(X, f);
    if (!f.general_position) throw GenericityFailure("b0 is not in general position");
    return f;
}

int cap_of(const JobSpec& spec, const GroundSet& X) {
    return spec.degcap >= 0 ? spec.degcap : static_cast<int>(X.size()) + 1;
}

// Everything the matroid layer knows about one configuration.
json cmd_analyze(const JobSpec& spec) {
    GroundSet X = ground_of(spec);
    auto bs = bases(X);
    auto is = independents(X);
    auto ibs = internal_bases(X);
    json facets = json::array();
    for (const auto& h : facet_hyperplanes(X))
        facets.push_back(json{{"normal", jintvec(h.normal)},
                              {"on", jsubset(h.on)},
                              {"mult", h.mult}});
    return json{{"status", "ok"},
                {"n", X.dim()},
                {"N", X.size()},
                {"unimodular", is_unimodular(X)},
                {"bases", bs.size()},
                {"independents", is.size()},
                {"internalBases", ibs.size()},
                {"facets", facets},
                {"hilbertCentral", jcounts(hilbert(X, SpaceKind::Central))},
                {"hilbertExternal", jcounts(hilbert(X, SpaceKind::External))},
                {"hilbertInternal", jcounts(hilbert(X, SpaceKind::Internal))},
                {"volume", jrat(volume(X))}};
}

SpaceKind kind_of(const std::string& w) {
    if (w == "central") return SpaceKind::Central;
    if (w == "external") return SpaceKind::External;
    if (w == "internal") return SpaceKind::Internal;
    throw ParseError("unknown kind: " + w);
}

json cmd_hilbert(const JobSpec& spec, const std::string& w) {
    GroundSet X = ground_of(spec);
    return json{{"status", "ok"}, {"kind", w}, {"h", jcounts(hilbert(X, kind_of(w)))}};
}

json cmd_basis(const JobSpec& spec, const std::string& w) {
    GroundSet X = ground_of(spec);
    SpaceKind k = kind_of(w);
    json elems = json::array();
    if (k == SpaceKind::Internal) {
        for (const auto& r : tilde_q_basis(X))
            elems.push_back(json{{"set", jsubset(r.basis)},
                                 {"poly", r.tq.render()},
                                 {"uncorrected", r.q.render()}});
    } else {
        auto fam = k == SpaceKind::Central ? bases(X) : independents(X);
        for (const auto& S : fam)
            elems.push_back(json{{"set", jsubset(S)},
                                 {"valuation", jsubset(xset(X, S))},
                                 {"poly", p_of(X, xset(X, S)).render()}});
    }
    return json{{"status", "ok"}, {"kind", w}, {"count", elems.size()}, {"basis", elems}};
}

IdealGens gens_of(const JobSpec& spec, const GroundSet& X, const std::string& sel) {
    if (sel == "i") return igens(X, 0);
    if (sel == "i+") return igens(X, 1);
    if (sel == "i-") return igens(X, -1);
    if (sel == "j") return jgens_central(X);
    if (sel == "j+") return jgens_external(X, frame_of(spec, X));
    if (sel == "j-") return jgens_internal(X);
    throw ParseError("unknown ideal selector: " + sel);
}

json cmd_ideal_gens(const JobSpec& spec, const std::string& sel) {
    GroundSet X = ground_of(spec);
    json out = jgens_report(gens_of(spec, X, sel));
    out["status"] = "ok";
    out["ideal"] = sel;
    return out;
}

json cmd_kernel(const JobSpec& spec, const std::string& sel) {
    GroundSet X = ground_of(spec);
    GradedPolySpace s = kernel(gens_of(spec, X, sel), cap_of(spec, X));
    json out = jspace(s);
    out["status"] = "ok";
    out["ideal"] = sel;
    return out;
}

json cmd_zonotope(const JobSpec& spec, const std::string& w) {
    GroundSet X = ground_of(spec);
    if (w == "volume") return json{{"status", "ok"}, {"volume", jrat(volume(X))}};
    if (w == "points" || w == "interior") {
        PointSet pts = lattice_points(X, w == "interior");
        return json{{"status", "ok"}, {"mode", w}, {"count", pts.size()}, {"points", jpoints(pts)}};
    }
    throw ParseError("unknown zonotope mode: " + w);
}

json cmd_arrangement(const JobSpec& spec, const std::string& w) {
    GroundSet X = ground_of(spec);
    if (w == "v+") {
        ExternalFrame f = frame_of(spec, X);
        GroundSet Xp = extended(X, f);
        ArrangementData A = generic_lambda(Xp, spec.seed);
        PointSet pts = external_vertices(A, X, f);
        return json{{"status", "ok"},
                    {"mode", w},
                    {"lambda", jratvec(A.lambda)},
                    {"attempts", A.attempts},
                    {"frameAttempts", f.attempts},
                    {"count", pts.size()},
                    {"vertices", jpoints(pts)}};
    }
    ArrangementData A = generic_lambda(X, spec.seed);
    PointSet pts;
    if (w == "vertices")
        pts = all_vertices(A);
    else if (w == "v-")
        pts = internal_vertices(A, X);
    else
        throw ParseError("unknown arrangement mode: " + w);
    return json{{"status", "ok"},
                {"mode", w},
                {"lambda", jratvec(A.lambda)},
                {"attempts", A.attempts},
                {"count", pts.size()},
                {"vertices", jpoints(pts)}};
}

json cmd_least(const JobSpec& spec) {
    if (!spec.points || spec.points->empty()) throw ParseError("least needs a point list");
    PointSet sigma;
    std::size_t n = (*spec.points)[0].size();
    if (n == 0) throw ParseError("empty point");
    for (const auto& row : *spec.points) {
        if (row.size() != n) throw ParseError("ragged point list");
        RatVec p;
        for (const auto& c : row) p.push_back(Rat::parse(c));
        sigma.push_back(std::move(p));
    }
    std::sort(sigma.begin(), sigma.end());
    sigma.erase(std::unique(sigma.begin(), sigma.end()), sigma.end());
    int cap = spec.degcap >= 0 ? spec.degcap : static_cast<int>(sigma.size()) + 1;
    GradedPolySpace s = least_space(sigma, n, cap);
    json out = jspace(s);
    out["status"] = "ok";
    out["points"] = sigma.size();
    return out;
}

json cmd_parking(const JobSpec& spec, const std::string& w) {
    std::size_t n = 0;
    if (spec.graph_n)
        n = *spec.graph_n;
    else if (!spec.matrix.empty())
        n = ground_of(spec).dim();
    else
        throw ParseError("parking needs n or a matrix");
    if (w == "match") {
        auto rep = parking_basis_match(n);
        return json{{"status", rep.ok ? "ok" : "no-matching"},
                    {"n", n},
                    {"pairs", rep.pairs},
                    {"ok", rep.ok}};
    }
    bool internal = w == "internal";
    if (!internal && w != "external") throw ParseError("unknown parking mode: " + w);
    auto fns = internal ? internal_parking(n) : external_parking(n);
    json list = json::array();
    std::map<int, std::size_t> by_degree;
    for (const auto& r : fns) {
        json a = json::array();
        int deg = 0;
        for (int v : r) {
            a.push_back(v);
            deg += v;
        }
        ++by_degree[deg];
        list.push_back(a);
    }
    json degrees = json::array();
    int topdeg = by_degree.empty() ? 0 : by_degree.rbegin()->first;
    for (int d = 0; d <= topdeg; ++d)
        degrees.push_back(by_degree.count(d) ? by_degree[d] : std::size_t(0));
    return json{{"status", "ok"},
                {"mode", w},
                {"n", n},
                {"count", fns.size()},
                {"byDegree", degrees},
                {"functions", list}};
}

struct VerifyOut {
    bool pass = true;
    bool applicable = true;
    json data;

    void check(const std::string& name, bool ok) {
        data[name] = ok;
        pass = pass && ok;
    }
};

// Clauses shared by the three main suites; the kernel clause is per suite.
void main_suite(VerifyOut& v, const GradedPolySpace& P, const GradedPolySpace& Dk,
                const IdealGens& jg, const PointSet& V, std::size_t family_count,
                int least_cap) {
    v.data["dimP"] = P.dim();
    v.data["dimD"] = Dk.dim();
    v.data["familyCount"] = family_count;
    v.data["hP"] = jcounts(P.hilbert());
    v.data["hD"] = jcounts(Dk.hilbert());
    v.check("dimensionsMatch", P.dim() == family_count && Dk.dim() == family_count);
    bool gram_ok = P.dim() == Dk.dim() && duality_gram(P, Dk).ok;
    v.check("dualityNonsingular", gram_ok);
    GradedPolySpace L = least_space(V, P.n, least_cap);
    v.data["vertexCount"] = V.size();
    v.check("dEqualsLeastOfVertices", same_space(Dk, L));
    v.check("verticesCorrectForD", Dk.dim() == V.size() && correctness_check(Dk, V));
    v.check("verticesCorrectForP", P.dim() == V.size() && correctness_check(P, V));
    DirectSumReport ds = direct_sum_check(P, jg);
    v.data["directSumCheckedTo"] = ds.checked_to;
    v.check("directSum", ds.ok);
}

VerifyOut verify_thm_central(const JobSpec& spec) {
    VerifyOut v;
    GroundSet X = ground_of(spec);
    GradedPolySpace P = pspace(X, SpaceKind::Central);
    GradedPolySpace K = kernel(igens(X, 0), default_icap(X, 0));
    IdealGens jg = jgens_central(X);
    GradedPolySpace Dk = kernel(jg, default_dcap(X, SpaceKind::Central));
    ArrangementData A = generic_lambda(X, spec.seed);
    v.data["lambdaAttempts"] = A.attempts;
    main_suite(v, P, Dk, jg, all_vertices(A), bases(X).size(),
               static_cast<int>(X.size()) + 1);
    v.check("pEqualsKernel", same_space(P, K));
    v.check("hilbertByCounting",
            hilbert(X, SpaceKind::Central) == P.hilbert());
    std::vector<Subset> fam = bases(X);
    v.check("dMatchesFamilyDual",
            same_space(Dk, dspace(X, fam, default_dcap(X, SpaceKind::Central))));
    return v;
}

VerifyOut verify_thm_external(const JobSpec& spec) {
    VerifyOut v;
    GroundSet X = ground_of(spec);
    ExternalFrame f = frame_of(spec, X);
    v.data["frameAttempts"] = f.attempts;
    GradedPolySpace P = pspace(X, SpaceKind::External);
    GradedPolySpace K = kernel(igens(X, 1), default_icap(X, 1));
    IdealGens jg = jgens_external(X, f);
    GradedPolySpace Dk = kernel(jg, default_dcap(X, SpaceKind::External));
    GroundSet Xp = extended(X, f);
    ArrangementData A = generic_lambda(Xp, spec.seed);
    v.data["lambdaAttempts"] = A.attempts;
    main_suite(v, P, Dk, jg, external_vertices(A, X, f), independents(X).size(),
               static_cast<int>(X.size()) + 1);
    v.check("pEqualsKernel", same_space(P, K));
    v.check("hilbertByCounting", hilbert(X, SpaceKind::External) == P.hilbert());
    return v;
}

VerifyOut verify_thm_internal(const JobSpec& spec) {
    VerifyOut v;
    GroundSet X = ground_of(spec);
    GradedPolySpace P = pspace(X, SpaceKind::Internal);
    IdealGens jg = jgens_internal(X);
    GradedPolySpace Dk = kernel(jg, default_dcap(X, SpaceKind::Internal));
    ArrangementData A = generic_lambda(X, spec.seed);
    v.data["lambdaAttempts"] = A.attempts;
    auto records = tilde_q_basis(X);
    std::vector<MPoly> tqs;
    for (const auto& r : records) tqs.push_back(r.tq);
    GradedPolySpace tilde_span = make_graded(X.dim(), tqs);
    main_suite(v, P, Dk, jg, internal_vertices(A, X), internal_bases(X).size(),
               static_cast<int>(X.size()) + 1);
    // Clause five constructively: the corrected polynomials span the kernel.
    v.check("tildeSpanEqualsKernel", same_space(P, tilde_span));
    v.check("hilbertByCounting", hilbert(X, SpaceKind::Internal) == P.hilbert());
    bool member = true, corrected = true;
    for (const auto& r : records) {
        if (!P.contains(r.tq)) member = false;
        MPoly diff = r.q - r.tq;
        if (!diff.is_zero() && !ideal_membership(jg, diff)) corrected = false;
    }
    v.check("tildeInKernel", member);
    v.check("correctionInIdeal", corrected);
    v.check("splitOfInternalIdeal", jminus_split_check(X).ok);
    std::vector<Subset> fam = internal_bases(X);
    v.check("dMatchesFamilyDual",
            same_space(Dk, dspace(X, fam, default_dcap(X, SpaceKind::Internal))));
    return v;
}

VerifyOut verify_interp(const JobSpec& spec, SpaceKind k) {
    VerifyOut v;
    GroundSet X = ground_of(spec);
    if (!is_unimodular(X)) {
        v.applicable = false;
        v.data["unimodular"] = false;
        return v;
    }
    v.data["unimodular"] = true;
    PointSet pts;
    std::size_t expected = 0;
    switch (k) {
        case SpaceKind::Central: {
            GenericPoint t = generic_t(X, spec.seed);
            v.data["t"] = jratvec(t.t);
            v.data["tAttempts"] = t.attempts;
            pts = zxt(X, t.t);
            expected = bases(X).size();
            break;
        }
        case SpaceKind::External:
            pts = lattice_points(X, false);
            expected = independents(X).size();
            break;
        case SpaceKind::Internal:
            pts = lattice_points(X, true);
            expected = internal_bases(X).size();
            break;
    }
    GradedPolySpace P = pspace(X, k);
    v.data["points"] = pts.size();
    v.data["familyCount"] = expected;
    v.data["dimP"] = P.dim();
    v.check("countMatchesFamily", pts.size() == expected);
    GradedPolySpace L = least_space(pts, X.dim(), static_cast<int>(X.size()) + 1);
    v.check("leastEqualsP", same_space(L, P));
    v.check("pointsCorrectForP", P.dim() == pts.size() && correctness_check(P, pts));
    return v;
}

VerifyOut verify_prop11(const JobSpec& spec) {
    VerifyOut v;
    GroundSet X = ground_of(spec);
    if (!is_unimodular(X)) {
        v.applicable = false;
        v.data["unimodular"] = false;
        return v;
    }
    v.data["unimodular"] = true;
    std::size_t closed = lattice_points(X, false).size();
    std::size_t open = lattice_points(X, true).size();
    std::size_t nb = bases(X).size(), ni = independents(X).size(), nm = internal_bases(X).size();
    std::size_t kplus = kernel(igens(X, 1), default_icap(X, 1)).dim();
    std::size_t kc = kernel(igens(X, 0), default_icap(X, 0)).dim();
    std::size_t km = kernel(igens(X, -1), default_icap(X, -1)).dim();
    GenericPoint t = generic_t(X, spec.seed);
    std::size_t translates = zxt(X, t.t).size();
    Rat vol = volume(X);
    v.data["latticeClosed"] = closed;
    v.data["latticeOpen"] = open;
    v.data["independents"] = ni;
    v.data["bases"] = nb;
    v.data["internalBases"] = nm;
    v.data["dimKerIplus"] = kplus;
    v.data["dimKerI"] = kc;
    v.data["dimKerIminus"] = km;
    v.data["volume"] = jrat(vol);
    v.data["translates"] = translates;
    v.check("closedCount", closed == ni && kplus == ni);
    v.check("centralCount", translates == nb && kc == nb && vol == Rat(Int(nb)));
    v.check("openCount", open == nm && km == nm);
    return v;
}

VerifyOut verify_thm_4_10(const JobSpec& spec) {
    VerifyOut v;
    GroundSet X = ground_of(spec);
    auto is = independents(X);
    GradedPolySpace span = pspace(X, SpaceKind::External);
    GradedPolySpace K = kernel(igens(X, 1), default_icap(X, 1));
    v.data["independents"] = is.size();
    v.data["dimSpan"] = span.dim();
    v.check("spanDimension", span.dim() == is.size());
    v.check("spanIsKernel", same_space(span, K));
    v.check("subsetSpanAgrees", same_space(pspace_plus_span(X), span));
    return v;
}

VerifyOut verify_thm_4_11(const JobSpec& spec) {
    VerifyOut v;
    GroundSet X = ground_of(spec);
    GradedPolySpace inter = intersection_plus_space(X);
    GradedPolySpace P = pspace(X, SpaceKind::External);
    v.data["hIntersection"] = jcounts(inter.hilbert());
    v.data["hExternal"] = jcounts(P.hilbert());
    v.check("intersectionEqualsExternal", same_space(inter, P));
    return v;
}

VerifyOut verify_conj61(const JobSpec& spec) {
    VerifyOut v;
    GroundSet X = ground_of(spec);
    Conj61Report rep = conjecture61_report(X);
    v.data["hSpan"] = jcounts(rep.h_span);
    v.data["hInternal"] = jcounts(rep.h_internal);
    v.data["containment"] = rep.containment;
    v.data["equal"] = rep.equal;
    v.data["verdict"] = rep.equal ? "equal" : "strict-subspace";
    v.pass = rep.containment;
    return v;
}

VerifyOut verify_ehrhart(const JobSpec& spec) {
    VerifyOut v;
    GroundSet X = ground_of(spec);
    if (!is_unimodular(X)) {
        v.applicable = false;
        v.data["unimodular"] = false;
        return v;
    }
    v.data["unimodular"] = true;
    EhrhartPoly E = ehrhart(X);
    json coeff = json::array();
    for (long long c : E.coeff) coeff.push_back(c);
    v.data["coefficients"] = coeff;
    bool dilations = true;
    for (long long t = 1; t <= 2; ++t) {
        std::vector<IntVec> cols;
        for (const auto& c : X.columns())
            for (long long r = 0; r < t; ++r) cols.push_back(c);
        std::size_t count = lattice_points(GroundSet(X.dim(), cols), false).size();
        v.data["dilation" + std::to_string(t)] = count;
        if (Int(count) != E.eval(t)) dilations = false;
    }
    v.check("dilationCounts", dilations);
    Int rec = E.eval(-1);
    if (X.dim() % 2 == 1) rec = -rec;
    v.data["reciprocity"] = jint(rec);
    std::size_t open = lattice_points(X, true).size();
    v.data["latticeOpen"] = open;
    v.check("reciprocityMatchesInterior", rec == Int(open));
    v.check("valueAtOne", E.eval(1) == Int(independents(X).size()));
    return v;
}

json finish_verify(const std::string& which, VerifyOut v, int& exit_code) {
    json out;
    out["status"] = v.applicable ? (v.pass ? "pass" : "fail") : "inapplicable";
    out["suite"] = which;
    for (auto& [k, val] : v.data.items()) out[k] = val;
    exit_code = v.applicable ? (v.pass ? 0 : 1) : 2;
    return out;
}

json cmd_verify(const JobSpec& spec, const std::string& which, int& exit_code) {
    if (which == "prop-1.1") return finish_verify(which, verify_prop11(spec), exit_code);
    if (which == "thm-3.8") return finish_verify(which, verify_thm_central(spec), exit_code);
    if (which == "thm-3.9")
        return finish_verify(which, verify_interp(spec, SpaceKind::Central), exit_code);
    if (which == "thm-4.8") return finish_verify(which, verify_thm_external(spec), exit_code);
    if (which == "thm-4.9")
        return finish_verify(which, verify_interp(spec, SpaceKind::External), exit_code);
    if (which == "thm-4.10") return finish_verify(which, verify_thm_4_10(spec), exit_code);
    if (which == "thm-4.11") return finish_verify(which, verify_thm_4_11(spec), exit_code);
    if (which == "thm-5.9") return finish_verify(which, verify_thm_internal(spec), exit_code);
    if (which == "thm-5.10")
        return finish_verify(which, verify_interp(spec, SpaceKind::Internal), exit_code);
    if (which == "conj-6.1") return finish_verify(which, verify_conj61(spec), exit_code);
    if (which == "ehrhart") return finish_verify(which, verify_ehrhart(spec), exit_code);
    throw ParseError("unknown verify suite: " + which);
}

}  // namespace

RunResult run(const std::vector<std::string>& command, const JobSpec& spec,
              const std::string& format) {
    RunResult res;
    json out;
    try {
        if (command.empty()) throw ParseError("no command");
        const std::string& c = command[0];
        auto arg = [&](std::size_t i) -> const std::string& {
            if (command.size() <= i) throw ParseError("missing argument for " + c);
            return command[i];
        };
        if (c == "analyze")
            out = cmd_analyze(spec);
        else if (c == "hilbert")
            out = cmd_hilbert(spec, arg(1));
        else if (c == "basis")
            out = cmd_basis(spec, arg(1));
        else if (c == "ideal-gens")
            out = cmd_ideal_gens(spec, arg(1));
        else if (c == "kernel")
            out = cmd_kernel(spec, arg(1));
        else if (c == "zonotope")
            out = cmd_zonotope(spec, arg(1));
        else if (c == "arrangement")
            out = cmd_arrangement(spec, arg(1));
        else if (c == "least")
            out = cmd_least(spec);
        else if (c == "parking")
            out = cmd_parking(spec, arg(1));
        else if (c == "verify")
            out = cmd_verify(spec, arg(1), res.exit_code);
        else
            throw ParseError("unknown command: " + c);
    } catch (const Error& e) {
        out = json{{"status", "error"}, {"message", e.what()}};
        res.exit_code = 2;
    }
    res.output = format == "text" ? render_text(out) : out.dump();
    return res;
}

}  // namespace zonalg
