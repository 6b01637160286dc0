#ifndef POLARCOH_VARIETIES_HPP
#define POLARCOH_VARIETIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "polarcoh/exactnum.hpp"
#include "polarcoh/matrixops.hpp"
#include "polarcoh/poly.hpp"

namespace polarcoh {

/// f^* on H^i: the characteristic polynomial is always present, the matrix
/// only when the model knows one. Degrees with b_i = 0 carry the constant
/// polynomial 1 and no matrix.
struct CohomologyAction {
  int degree = 0;
  long betti = 0;
  IntPolynomial charpoly;
  std::optional<IntMatrix> matrix;
};

enum class ModelKind { abelian_en, abelian, grassmannian, generic };
enum class GrassmannianVariant { scalar, involution };

const char* to_string(ModelKind kind);
const char* to_string(GrassmannianVariant variant);

struct VarietyModel {
  ModelKind kind = ModelKind::generic;
  int dimension = 0;
  BigInt q;
  std::vector<CohomologyAction> actions;     // indexed by degree 0..2d
  std::vector<std::vector<long>> hodge;      // hodge[i] = h^{0,i}..h^{i,0}; empty when unknown

  // Construction data, kept so a model can be written back as a descriptor.
  std::optional<IntMatrix> h1_matrix;        // abelian, abelian_en
  std::optional<IntMatrix> isogeny_matrix;   // abelian_en
  int grassmannian_k = 0;
  int grassmannian_n = 0;
  GrassmannianVariant variant = GrassmannianVariant::scalar;
  bool strict = false;                       // generic

  // abelian_en only: a positive-definite D with A^T D A = q D, when found.
  std::optional<RatMatrix> polarization;
  std::vector<std::string> warnings;

  long betti(int i) const { return actions.at(static_cast<std::size_t>(i)).betti; }
  long euler_characteristic() const;
  bool has_hodge() const { return !hodge.empty(); }
  bool has_all_matrices() const;
};

VarietyModel abelian_from_h1(int d, const IntMatrix& m, const BigInt& q);
VarietyModel abelian_en(const IntMatrix& a, const BigInt& q);
VarietyModel grassmannian(int k, int n, const BigInt& q, GrassmannianVariant variant);

struct GenericDegreeData {
  std::optional<IntPolynomial> charpoly;
  std::optional<IntMatrix> matrix;
};

/// Validates user-supplied degree data. In strict mode the H^0 and H^{2d}
/// actions must be t - 1 and t - q^d; otherwise deviations become warnings.
VarietyModel generic_model(int d, const BigInt& q, std::vector<GenericDegreeData> degrees,
                           std::vector<std::vector<long>> hodge, bool strict = false);

// Partitions with at most `rows` parts, each at most `cols`, of the given size,
// listed in decreasing lexicographic order. Each is padded to `rows` entries.
std::vector<std::vector<int>> box_partitions(int rows, int cols, int size);
std::vector<int> conjugate_partition(const std::vector<int>& lambda, int rows, int cols);
std::vector<int> complement_partition(const std::vector<int>& lambda, int cols);
// Permutation matrix of partition conjugation on the size-j partitions of a k x k box.
IntMatrix conjugation_permutation(int k, int j);

}  // namespace polarcoh

#endif  // POLARCOH_VARIETIES_HPP
