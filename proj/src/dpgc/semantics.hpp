#pragma once

#include "graph.hpp"
#include "instrument.hpp"

namespace dpgc {

// The five families of computational models plus the adaptive-local ones.
enum class Model { B, BAff, C, M, MPi4, Q, P, PTilde, A, ATilde };

Model model_from_string(const std::string& s);
std::string model_to_string(Model m);

// Label factories with the registry arities filled in.
Label make_label(const std::string& name);
Label make_m_label(const Angle& alpha);  // the MBQC measurement M_alpha

// Resolves labels of one model to adaptive instruments.
class LabelSemantics {
 public:
  explicit LabelSemantics(Model model) : model_(model) {}
  Model model() const { return model_; }

  // throws validation_error for labels outside the model
  AdaptiveInstrument resolve(const Label& label) const;
  bool resolvable(const Label& label) const;

  // phi-image validator: strict membership in the paper's label set, i.e.
  // without the derived sugar labels (NOT, 0, AND, M_X, ...)
  bool strict_member(const Label& label) const;

 private:
  Model model_;
};

inline LabelSemantics semantics(Model m) { return LabelSemantics(m); }

// instrument for a label name irrespective of model membership (used by the
// resolver and by tests)
AdaptiveInstrument label_instrument(const Label& label);

}  // namespace dpgc
