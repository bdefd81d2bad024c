#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regembed/coherent.hpp"
#include "regembed/isometry.hpp"
#include "regembed/predistance.hpp"
#include "regembed/spectral.hpp"
#include "regembed/twin_reduce.hpp"

namespace regembed {

enum class ReportFormat { json, text };

// Everything one pipeline run produced. Sections that a run skipped (size
// caps, empty input) stay empty and render as vacuous.
struct RunReport {
  std::string input_name;
  int n = 0;
  int distinct_edges = 0;
  long long total_multiplicity = 0;
  bool simple = true;
  bool connected = true;
  std::vector<int> degrees;

  Partition twin;
  bool irreducible = true;
  std::optional<AutOrderFactorization> factorization;
  std::string factorization_note;

  PredistanceKind kind = PredistanceKind::adjacency;
  std::optional<bool> commuting;
  std::optional<bool> reconstructing;
  std::vector<XiEntry> xi;

  std::vector<EigenGroup> adjacency_spectrum;
  SpectralProfile profile;
  std::optional<int> zeta_value;
  std::optional<Embedding> embedding;
  double max_reproduction_error = 0;

  std::optional<RegularityCertificate> certificate;
  std::string certificate_note;
};

// Stable field order; floats carry 12 significant digits in both formats.
std::string render_report(const RunReport& report, ReportFormat format);

std::string embedding_json(const Embedding& emb);
std::string embedding_csv(const Embedding& emb);
std::string certificate_json(const RegularityCertificate& cert);
std::string profile_json(const SpectralProfile& prof, std::optional<int> zeta_value);
std::string twin_json(const Partition& p, const Multigraph& quotient_graph,
                      const AutOrderFactorization& f);
std::string basis_json(const CoherentBasis& basis, bool include_matrices);

double round_sig12(double v);
std::string format_sig12(double v);

}  // namespace regembed
