#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "entfid/complex_matrix.hpp"
#include "entfid/state.hpp"

namespace entfid {

/// A channel given by a finite Kraus family. The constructor checks shape
/// only (non-empty, all operators dim x dim); trace preservation and complete
/// positivity are checked by validate(), so deliberately broken families can
/// be represented and reported on.
class KrausChannel {
 public:
  KrausChannel(std::size_t dim, std::vector<ComplexMatrix> kraus_ops);

  std::size_t dim() const { return dim_; }
  const std::vector<ComplexMatrix>& kraus_ops() const { return kraus_ops_; }

 private:
  std::size_t dim_;
  std::vector<ComplexMatrix> kraus_ops_;
};

enum class ChannelFamily {
  Identity,
  PauliX,
  Dephasing,
  Depolarizing,
  WernerHolevoQubit,
  Weyl,
  AmplitudeDamping,
};

std::string_view family_name(ChannelFamily family);
ChannelFamily family_from_name(std::string_view name);  // case-insensitive

/// Probability matrix of the generalized Pauli (Weyl) channel: p_ij weights
/// X^i Z^j, so p10 multiplies X and p01 multiplies Z. Entries are nonnegative
/// and sum to 1 within 1e-12.
struct WeylProbabilities {
  double p00 = 1.0;
  double p10 = 0.0;
  double p01 = 0.0;
  double p11 = 0.0;
};

/// Tagged description of a named channel family with its parameters.
/// Factories validate parameter ranges.
class ChannelSpec {
 public:
  static ChannelSpec identity();
  static ChannelSpec pauli_x(double u);
  static ChannelSpec dephasing(double u);
  static ChannelSpec depolarizing(double u);
  static ChannelSpec werner_holevo();
  static ChannelSpec weyl(const WeylProbabilities& probabilities);
  static ChannelSpec amplitude_damping(double gamma);

  ChannelFamily family() const { return family_; }
  bool has_noise_parameter() const;

  double u() const;      // PauliX, Dephasing, Depolarizing
  double gamma() const;  // AmplitudeDamping
  const WeylProbabilities& weyl_probabilities() const;  // Weyl

 private:
  ChannelSpec(ChannelFamily family, double noise, WeylProbabilities weyl);

  ChannelFamily family_;
  double noise_;
  WeylProbabilities weyl_;
};

/// The Kraus family for the spec, exactly as each channel is defined, with
/// zero-coefficient operators omitted.
KrausChannel build(const ChannelSpec& spec);

/// sum_i K_i X K_i^dagger on an arbitrary operator.
ComplexMatrix apply_to_matrix(const KrausChannel& ch, const ComplexMatrix& x);

/// Channel action on a state; the result is validated.
DensityOperator apply(const KrausChannel& ch, const DensityOperator& rho);

/// Choi matrix (I (x) N) applied to the unnormalized maximally entangled
/// projector sum_ij |ii><jj|, reference factor first, column-stacking
/// convention. Trace d for trace-preserving channels.
ComplexMatrix choi_matrix(const KrausChannel& ch);

/// Choi matrix of an arbitrary linear map given by its action on matrices.
/// Same convention as choi_matrix; used to test maps that have no Kraus form.
ComplexMatrix choi_of_map(std::size_t dim,
                          const std::function<ComplexMatrix(const ComplexMatrix&)>& map);

struct ValidationReport {
  double tp_residual;          // max-entry |sum K_i^dagger K_i - I|
  double min_choi_eigenvalue;  // smallest Choi eigenvalue
  bool ok;                     // tp_residual <= tol and min_choi_eigenvalue >= -tol
};

ValidationReport validate(const KrausChannel& ch, double tol = 1e-10);

/// JSON codec for ChannelSpec:
///   {"family": "pauli-x", "u": 0.5}
///   {"family": "amplitude-damping", "gamma": 0.25}
///   {"family": "weyl", "P": [[p00, p01], [p10, p11]]}
///   {"family": "identity"} / {"family": "werner-holevo"}
/// Family names are matched case-insensitively on input.
std::string to_json(const ChannelSpec& spec);
ChannelSpec channel_spec_from_json(const std::string& text);

}  // namespace entfid
