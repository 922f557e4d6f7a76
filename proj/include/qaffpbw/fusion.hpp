#pragma once

// Fusion facts: verified identities hd(V_a (x) V_b) = V_c between fundamental
// labels. Loaded from JSON, or read off phi for an adapted word.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qaffpbw/affine.hpp"

namespace qaff {

struct FusionFact {
  SigmaPoint left;
  SigmaPoint right;
  SigmaPoint result;
  /// The identity also holds after a common exponent translation and after D.
  bool shift_equivariant = true;
};

class FusionFacts {
 public:
  FusionFacts() = default;
  FusionFacts(std::string type, std::vector<FusionFact> facts);

  /// Facts shipped with the library. Only A2^1 carries any.
  static FusionFacts builtin(const AffineTypeInfo& type);
  /// {"type":"A2^1","facts":[{"head":[[1,0],[1,2]],"eq":[2,1],"shift_equivariant":true}]}
  static FusionFacts from_json_text(std::string_view text);
  std::string to_json_text() const;

  void merge(const FusionFacts& other);

  /// The label c with hd(V_a (x) V_b) = V_c, if some fact (or a translate or
  /// D-image of one) says so.
  std::optional<SigmaPoint> lookup(const AffineTypeInfo& type, SigmaPoint a, SigmaPoint b) const;

  const std::string& type() const { return type_; }
  const std::vector<FusionFact>& facts() const { return facts_; }
  bool empty() const { return facts_.empty(); }

 private:
  std::string type_;
  std::vector<FusionFact> facts_;
};

}  // namespace qaff
