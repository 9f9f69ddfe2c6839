// JSON serialization of the report types. Exact rationals are serialized as
// "a/b" strings, never as floats.
#ifndef IGUSA_JSON_IO_HPP
#define IGUSA_JSON_IO_HPP

#include <json.hpp>

#include "igusa/expsum.hpp"
#include "igusa/invariants.hpp"
#include "igusa/verify.hpp"
#include "igusa/zeta.hpp"

namespace igusa {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rat& r) { return rat_string(r); }

inline Json to_json(const ExtendedRat& r) { return r.str(); }

inline Json to_json(const PolyT& p) {
  Json arr = Json::array();
  for (const auto& c : p.c) arr.push_back(rat_string(c));
  return arr;
}

inline Json to_json(const Face& f, const NewtonPolyhedron& P) {
  Json j;
  j["id"] = f.id;
  j["dim"] = f.dim;
  j["codim"] = f.codim;
  j["is_proper"] = f.is_proper;
  j["is_compact"] = f.is_compact;
  j["affine_span_contains_origin"] = f.affine_span_contains_origin;
  Json verts = Json::array();
  for (int vi : f.vertex_ids) {
    Json v = Json::array();
    for (const auto& x : P.vertices[vi]) v.push_back(x.convert_to<long long>());
    verts.push_back(v);
  }
  j["vertices"] = verts;
  j["rays"] = f.rays;
  Json sp = Json::array();
  for (const auto& s : f.support_points) {
    Json v = Json::array();
    for (const auto& x : s) v.push_back(x.convert_to<long long>());
    sp.push_back(v);
  }
  j["support_points"] = sp;
  return j;
}

inline Json to_json(const NewtonPolyhedron& P) {
  Json j;
  j["n"] = P.n;
  Json verts = Json::array();
  for (const auto& v : P.vertices) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.convert_to<long long>());
    verts.push_back(a);
  }
  j["vertices"] = verts;
  Json facets = Json::array();
  for (const auto& f : P.facets) {
    Json a;
    Json nrm = Json::array();
    for (const auto& x : f.normal) nrm.push_back(x.convert_to<long long>());
    a["normal"] = nrm;
    a["offset"] = f.offset.convert_to<long long>();
    facets.push_back(a);
  }
  j["facets"] = facets;
  return j;
}

inline Json to_json(const SigmaInvariants& inv) {
  Json j;
  j["t0"] = rat_string(inv.t0);
  j["sigma"] = inv.sigma.str();
  j["tau0"] = inv.tau0;
  j["kappa"] = inv.kappa;
  j["sigma_F1"] = rat_string(inv.sigma_F1);
  j["agrees"] = inv.agrees;
  j["sigma0"] = rat_string(inv.sigma0());
  return j;
}

inline Json to_json(const HyperplaneDecomposition& D) {
  Json j;
  j["exists"] = D.exists;
  if (!D.exists) return j;
  Json c = Json::array();
  for (const auto& x : D.c) c.push_back(x.convert_to<long long>());
  j["c"] = c;
  j["b"] = D.b.convert_to<long long>();
  auto vars1 = [](const std::vector<int>& v) {
    Json a = Json::array();
    for (int x : v) a.push_back(x + 1);  // 1-based like the grammar
    return a;
  };
  j["s_vars"] = vars1(D.s_vars);
  j["t_vars"] = vars1(D.t_vars);
  j["r_vars"] = vars1(D.r_vars);
  j["h"] = render(D.h);
  Json g = Json::array();
  for (const auto& gi : D.g) g.push_back(render(gi));
  j["g"] = g;
  j["strictly_positive_normal"] = D.strictly_positive_normal;
  return j;
}

inline Json to_json(const NondegCertificate& cert, const FiniteFieldHint* = nullptr);

struct FiniteFieldHint {};  // placeholder, unused

inline Json to_json(const NondegCertificate& cert, uint32_t p) {
  Json j;
  j["mode"] = cert.mode == NondegMode::Strong ? "strong" : "weak";
  j["p"] = p;
  j["k_max"] = cert.k_max;
  j["support_changed"] = cert.support_changed;
  j["applicable"] = cert.applicable;
  j["overall"] = !cert.applicable ? "not-nondegenerate-at-p"
               : cert.overall_nondegenerate
                   ? "nondegenerate-up-to-k_max"
                   : "degenerate";
  Json faces = Json::array();
  for (const auto& v : cert.per_face) {
    Json fj;
    fj["face"] = v.face_id;
    fj["nondegenerate"] = v.nondegenerate;
    if (v.witness) {
      FiniteField F(cert.p, v.witness->field_degree);
      Json w;
      w["face"] = v.witness->face_id;
      w["field_degree"] = v.witness->field_degree;
      Json pt = Json::array();
      for (const auto& x : v.witness->point) pt.push_back(F.to_string(x));
      w["point"] = pt;
      fj["witness"] = w;
    }
    faces.push_back(fj);
  }
  j["per_face"] = faces;
  j["points_searched"] = cert.points_searched;
  return j;
}

inline Json to_json(const BoundReport& rep) {
  Json j;
  j["poly"] = rep.poly;
  j["sigma"] = rat_string(rep.sigma);
  j["kappa"] = rep.kappa;
  j["sigma0"] = rat_string(rep.sigma0);
  j["hyperplane"] = rep.hyperplane;
  Json rows = Json::array();
  for (const auto& r : rep.rows) {
    Json rj;
    rj["p"] = r.p;
    rj["m"] = r.m;
    rj["abs_S"] = r.abs_S;
    rj["normalized"] = r.normalized;
    rj["igusa_normalized"] = r.igusa_normalized;
    rj["asserted"] = r.asserted;
    rows.push_back(rj);
  }
  j["rows"] = rows;
  j["c_empirical"] = rep.c_empirical;
  j["c_igusa"] = rep.c_igusa;
  j["flagged_rows"] = rep.flagged;
  return j;
}

inline Json to_json(const FFBoundReport& rep) {
  Json j;
  j["poly"] = rep.poly;
  j["sigma"] = rat_string(rep.sigma);
  j["b"] = rep.b.convert_to<long long>();
  Json rows = Json::array();
  for (const auto& r : rep.rows) {
    Json rj;
    rj["p"] = r.p;
    rj["k"] = r.k;
    rj["q"] = r.q;
    if (r.skipped) {
      rj["skipped"] = r.note;
    } else {
      rj["abs_normalized"] = r.abs_normalized;
      rj["ratio"] = r.ratio;
    }
    rows.push_back(rj);
  }
  j["rows"] = rows;
  j["c_empirical"] = rep.c_empirical;
  return j;
}

inline Json to_json(const ZetaResult& zr, const PoleReport* poles = nullptr) {
  Json j;
  j["p"] = zr.p;
  j["numerator"] = to_json(zr.Z.num());
  j["denominator"] = to_json(zr.Z.den());
  Json terms = Json::array();
  for (const auto& t : zr.terms) {
    Json tj;
    tj["face"] = t.face_id;
    tj["torus_zeros"] = t.torus_zero_count;
    tj["L_num"] = to_json(t.L.num());
    tj["L_den"] = to_json(t.L.den());
    tj["S_num"] = to_json(t.S.num());
    tj["S_den"] = to_json(t.S.den());
    Json pieces = Json::array();
    for (const auto& piece : t.gf.pieces) {
      Json pj;
      Json numt = Json::array();
      for (const auto& [nu, N] : piece.num_terms)
        numt.push_back({{"nu", nu.convert_to<long long>()}, {"N", N.convert_to<long long>()}});
      pj["numerator_terms"] = numt;
      Json dent = Json::array();
      for (const auto& [nu, N] : piece.den_factors)
        dent.push_back({{"nu", nu.convert_to<long long>()}, {"N", N.convert_to<long long>()}});
      pj["denominator_factors"] = dent;
      pieces.push_back(pj);
    }
    tj["cone_pieces"] = pieces;
    terms.push_back(tj);
  }
  j["term_sum"] = terms;
  if (poles) {
    Json cands = Json::array();
    for (const auto& c : poles->candidates) cands.push_back(rat_string(c));
    j["candidates"] = cands;
    if (poles->largest_real) j["largest_real_pole"] = rat_string(-*poles->largest_real);
    j["order_at_sigma"] = poles->order_at_sigma;
    j["expected_order"] = poles->expected_order;
    j["leading_limit"] = poles->leading_limit;
    j["method"] = poles->method;
  }
  return j;
}

inline Json to_json(const DHReport& rep) {
  Json j;
  j["poly"] = rep.poly;
  j["sigma"] = rat_string(rep.sigma);
  j["kappa"] = rep.kappa;
  j["expected_order"] = rep.expected_order;
  Json rows = Json::array();
  for (const auto& r : rep.rows) {
    Json rj;
    rj["p"] = r.p;
    if (r.skipped) {
      rj["skipped"] = r.note;
    } else {
      rj["actual_order"] = r.actual_order;
      rj["limit"] = r.limit;
      rj["ratio"] = r.ratio;
      if (!r.note.empty()) rj["note"] = r.note;
    }
    rows.push_back(rj);
  }
  j["rows"] = rows;
  j["max_ratio"] = rep.max_ratio;
  j["stored_constant"] = rep.stored_constant;
  j["verdict"] = rep.verdict;
  return j;
}

inline Json to_json(const SuiteResult& s) {
  Json j;
  j["suite"] = s.suite;
  Json checks = Json::array();
  for (const auto& c : s.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    cj["detail"] = c.detail;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  j["pass"] = s.pass();
  return j;
}

}  // namespace igusa

#endif
