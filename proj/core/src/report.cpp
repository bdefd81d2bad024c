#include "regembed/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <nlohmann/json.hpp>

#include "regembed/graph_io.hpp"

namespace regembed {

using ordered_json = nlohmann::ordered_json;

std::string format_sig12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double round_sig12(double v) { return std::strtod(format_sig12(v).c_str(), nullptr); }

namespace {

ordered_json json_number(double v) { return round_sig12(v); }

ordered_json profile_node(const SpectralProfile& prof) {
  ordered_json groups = ordered_json::array();
  for (const auto& g : prof.groups) groups.push_back({json_number(g.value), g.multiplicity});
  return ordered_json{{"groups", groups}, {"ones_eigenvalue", json_number(prof.ones_eigenvalue)}};
}

ordered_json spectrum_node(const std::vector<EigenGroup>& groups) {
  ordered_json arr = ordered_json::array();
  for (const auto& g : groups) arr.push_back({json_number(g.value), g.multiplicity});
  return arr;
}

ordered_json embedding_node(const Embedding& emb) {
  ordered_json points = ordered_json::array();
  for (int i = 0; i < emb.points.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < emb.points.cols(); ++j) row.push_back(json_number(emb.points(i, j)));
    points.push_back(row);
  }
  ordered_json slices = ordered_json::array();
  for (auto [a, b] : emb.eigenspace_slices) slices.push_back({a, b});
  ordered_json groups = ordered_json::array();
  for (const auto& g : emb.profile.groups) groups.push_back({json_number(g.value), g.multiplicity});
  return ordered_json{{"points", points},
                      {"zeta", emb.zeta},
                      {"shift_mode", to_string(emb.shift_mode)},
                      {"shift_value", json_number(emb.shift_value)},
                      {"profile", groups},
                      {"slices", slices}};
}

ordered_json certificate_node(const RegularityCertificate& cert) {
  ordered_json witnesses = ordered_json::object();
  if (cert.witnesses.coincident_points)
    witnesses["coincident_points"] = {cert.witnesses.coincident_points->first + 1,
                                      cert.witnesses.coincident_points->second + 1};
  if (cert.witnesses.commuting) {
    ordered_json images = ordered_json::array();
    for (int v : cert.witnesses.commuting->perm.images) images.push_back(v + 1);
    witnesses["commuting"] = {{"permutation", images},
                              {"pair", {cert.witnesses.commuting->i + 1,
                                        cert.witnesses.commuting->j + 1}}};
  }
  if (cert.witnesses.reconstructing) {
    const auto& w = *cert.witnesses.reconstructing;
    witnesses["reconstructing"] = {{"pair", {w[0], w[1]}}, {"other_pair", {w[2], w[3]}}};
  }
  if (cert.witnesses.group_mismatch) {
    ordered_json images = ordered_json::array();
    for (int v : cert.witnesses.group_mismatch->images) images.push_back(v + 1);
    witnesses["group_mismatch"] = {{"permutation", images},
                                   {"side", cert.witnesses.group_mismatch_side}};
  }
  return ordered_json{{"aut_order", cert.aut_order},
                      {"isometry_perm_order", cert.isometry_perm_order},
                      {"groups_equal", cert.groups_equal},
                      {"spans", cert.spans},
                      {"injective", cert.injective},
                      {"commuting", cert.commuting},
                      {"reconstructing", cert.reconstructing},
                      {"witnesses", witnesses}};
}

ordered_json classes_node(const Partition& p) {
  ordered_json classes = ordered_json::array();
  for (const auto& cls : p.classes) {
    ordered_json members = ordered_json::array();
    for (int v : cls) members.push_back(v + 1);
    classes.push_back(members);
  }
  return classes;
}

std::string text_spectrum(const std::vector<EigenGroup>& groups) {
  std::ostringstream out;
  for (size_t i = 0; i < groups.size(); ++i) {
    if (i) out << ", ";
    out << format_sig12(groups[i].value) << " (x" << groups[i].multiplicity << ")";
  }
  if (groups.empty()) out << "(none)";
  return out.str();
}

}  // namespace

std::string embedding_json(const Embedding& emb) { return embedding_node(emb).dump(2) + "\n"; }

std::string embedding_csv(const Embedding& emb) {
  std::ostringstream out;
  for (int i = 0; i < emb.points.rows(); ++i) {
    for (int j = 0; j < emb.points.cols(); ++j) {
      if (j) out << ",";
      out << format_sig12(emb.points(i, j));
    }
    out << "\n";
  }
  return out.str();
}

std::string certificate_json(const RegularityCertificate& cert) {
  return certificate_node(cert).dump(2) + "\n";
}

std::string profile_json(const SpectralProfile& prof, std::optional<int> zeta_value) {
  ordered_json doc = profile_node(prof);
  if (zeta_value) doc["zeta"] = *zeta_value;
  return doc.dump(2) + "\n";
}

std::string twin_json(const Partition& p, const Multigraph& quotient_graph,
                      const AutOrderFactorization& f) {
  ordered_json within = ordered_json::array();
  for (size_t c = 0; c < p.classes.size(); ++c) {
    if (p.classes[c].size() >= 2)
      within.push_back(p.within_multiplicity[c]);
    else
      within.push_back(nullptr);
  }
  ordered_json quotient_doc =
      ordered_json::parse(serialize_multigraph(quotient_graph, GraphFormat::json));
  ordered_json fact = {{"class_sizes", f.class_sizes},
                       {"quotient_aut_order", f.quotient_aut_order},
                       {"total", f.total}};
  return ordered_json{{"classes", classes_node(p)},
                      {"within_multiplicity", within},
                      {"quotient", quotient_doc},
                      {"factorization", fact}}
             .dump(2) +
         "\n";
}

std::string basis_json(const CoherentBasis& basis, bool include_matrices) {
  ordered_json sizes = ordered_json::array();
  for (const auto& b : basis.classes) sizes.push_back(b.sum());
  ordered_json doc = {{"class_count", basis.class_count()},
                      {"diagonal_count", basis.diagonal_count},
                      {"class_sizes", sizes},
                      {"transpose_of", basis.transpose_of}};
  if (include_matrices) {
    ordered_json mats = ordered_json::array();
    for (const auto& b : basis.classes) {
      ordered_json rows = ordered_json::array();
      for (int i = 0; i < basis.n; ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < basis.n; ++j) row.push_back(b(i, j));
        rows.push_back(row);
      }
      mats.push_back(rows);
    }
    doc["matrices"] = mats;
  }
  return doc.dump(2) + "\n";
}

std::string render_report(const RunReport& r, ReportFormat format) {
  if (format == ReportFormat::json) {
    ordered_json doc;
    doc["input"] = {{"name", r.input_name},
                    {"n", r.n},
                    {"distinct_edges", r.distinct_edges},
                    {"total_multiplicity", r.total_multiplicity},
                    {"simple", r.simple},
                    {"connected", r.connected},
                    {"degrees", r.degrees}};
    ordered_json twin = {{"classes", classes_node(r.twin)}, {"irreducible", r.irreducible}};
    if (r.factorization) {
      twin["factorization"] = {{"class_sizes", r.factorization->class_sizes},
                               {"quotient_aut_order", r.factorization->quotient_aut_order},
                               {"total", r.factorization->total}};
    } else if (!r.factorization_note.empty()) {
      twin["factorization_note"] = r.factorization_note;
    }
    doc["twin"] = twin;
    ordered_json pre = {{"kind", to_string(r.kind)}};
    if (r.commuting) pre["commuting"] = *r.commuting;
    if (r.reconstructing) {
      pre["reconstructing"] = *r.reconstructing;
      if (*r.reconstructing) {
        ordered_json xi = ordered_json::array();
        for (const auto& e : r.xi) xi.push_back({json_number(e.value), e.multiplicity});
        pre["xi"] = xi;
      }
    }
    doc["predistance"] = pre;
    doc["adjacency_spectrum"] = spectrum_node(r.adjacency_spectrum);
    doc["profile"] = profile_node(r.profile);
    if (r.zeta_value) doc["zeta"] = *r.zeta_value;
    if (r.embedding) {
      doc["embedding"] = embedding_node(*r.embedding);
      doc["embedding"]["max_reproduction_error"] = json_number(r.max_reproduction_error);
    }
    if (r.certificate) doc["certificate"] = certificate_node(*r.certificate);
    if (!r.certificate_note.empty()) doc["certificate_note"] = r.certificate_note;
    return doc.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "== input ==\n";
  out << "name: " << r.input_name << "\n";
  out << "vertices: " << r.n << "\n";
  out << "edges: " << r.distinct_edges << " (total multiplicity " << r.total_multiplicity
      << ")\n";
  out << "simple: " << (r.simple ? "yes" : "no") << "\n";
  out << "connected: " << (r.connected ? "yes" : "no") << "\n";
  out << "degrees:";
  for (int d : r.degrees) out << " " << d;
  if (r.degrees.empty()) out << " (none)";
  out << "\n\n";

  out << "== twin decomposition ==\n";
  out << "classes:";
  for (const auto& cls : r.twin.classes) {
    out << " {";
    for (size_t i = 0; i < cls.size(); ++i) out << (i ? "," : "") << cls[i] + 1;
    out << "}";
  }
  if (r.twin.classes.empty()) out << " (none)";
  out << "\n";
  out << "irreducible: " << (r.irreducible ? "yes" : "no") << "\n";
  if (r.factorization) {
    out << "automorphism order: ";
    bool any = false;
    for (int s : r.factorization->class_sizes)
      if (s > 1) {
        out << s << "! * ";
        any = true;
      }
    if (any)
      out << r.factorization->quotient_aut_order << " = " << r.factorization->total << "\n";
    else
      out << r.factorization->total << "\n";
  } else if (!r.factorization_note.empty()) {
    out << "automorphism order: " << r.factorization_note << "\n";
  }
  out << "\n";

  out << "== predistance ==\n";
  out << "kind: " << to_string(r.kind) << "\n";
  if (r.commuting) out << "commuting: " << (*r.commuting ? "yes" : "no") << "\n";
  if (r.reconstructing) {
    out << "reconstructing: " << (*r.reconstructing ? "yes" : "no") << "\n";
    if (*r.reconstructing) {
      out << "value -> multiplicity:";
      for (const auto& e : r.xi)
        out << " " << format_sig12(e.value) << "->" << e.multiplicity;
      out << "\n";
    }
  }
  out << "\n";

  out << "== spectrum ==\n";
  out << "adjacency spectrum: " << text_spectrum(r.adjacency_spectrum) << "\n";
  out << "bilinear form profile: " << text_spectrum(r.profile.groups) << "\n";
  if (r.zeta_value) out << "zeta: " << *r.zeta_value << "\n";
  out << "\n";

  out << "== embedding ==\n";
  if (r.embedding) {
    out << "dimension: " << r.embedding->zeta << "\n";
    out << "shift: " << to_string(r.embedding->shift_mode) << " (value "
        << format_sig12(r.embedding->shift_value) << ")\n";
    if (r.embedding->degenerate) out << "degenerate: yes\n";
    out << "max squared-distance error: " << format_sig12(r.max_reproduction_error) << "\n";
  } else {
    out << "(not computed)\n";
  }
  out << "\n";

  out << "== certificate ==\n";
  if (r.certificate) {
    const auto& c = *r.certificate;
    out << "automorphism group order: " << c.aut_order << "\n";
    out << "isometry permutation order: " << c.isometry_perm_order << "\n";
    out << "groups equal: " << (c.groups_equal ? "yes" : "no") << "\n";
    out << "injective: " << (c.injective ? "yes" : "no") << ", spans: "
        << (c.spans ? "yes" : "no") << ", commuting: " << (c.commuting ? "yes" : "no")
        << ", reconstructing: " << (c.reconstructing ? "yes" : "no") << "\n";
  } else {
    out << (r.certificate_note.empty() ? "(not computed)" : r.certificate_note) << "\n";
  }
  return out.str();
}

}  // namespace regembed
