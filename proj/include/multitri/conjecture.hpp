#pragma once

// Empirical checks of statements that are settled for k = 2 and open for
// other k.  Results are reports, never assertions.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "multitri/cylinder.hpp"

namespace multitri {

struct LabReport {
  std::string check;
  int n = 0;
  int k = 0;
  bool control = false;  // k = 2, where the statement is known to hold
  long long instances = 0;
  long long failures = 0;
  nlohmann::json details = nlohmann::json::object();
  std::vector<nlohmann::json> witnesses;

  bool holds() const { return failures == 0; }
  nlohmann::json to_json() const;
};

/// Every relevant angle lies in exactly one k-star of the lift.
LabReport check_star_decomposition_k(int n, int k, const EnumerationOptions& options = {});

/// Cylinder k-triangulations versus n-periodic k-triangulations of the 2kn-gon.
LabReport check_bijection_k(int n, int k, const EnumerationOptions& options = {});

/// Observed (stars, relevant, total) against (n-1, k(n-1), k(2n-1)).
LabReport check_counts_k(int n, int k, const EnumerationOptions& options = {});

/// Every (k+1)-crossing among relevant lifts that uses two translates of one
/// class can be traded for one using a single translate of that class.
LabReport check_translation_lemma(int n, int k, const EnumerationOptions& options = {});

/// A crossing of the lifted classes of `crossing` containing exactly one
/// translate of its repeated class, if any.
std::optional<std::vector<Edge>> single_translate_crossing(const std::vector<Edge>& crossing, int k, int n);

/// Greedily drops classes (other than `keep`) while `still_fails` holds.
std::vector<EdgeClass> minimize_witness(
    std::vector<EdgeClass> classes, const std::vector<EdgeClass>& keep,
    const std::function<bool(const std::vector<EdgeClass>&)>& still_fails);

}  // namespace multitri
