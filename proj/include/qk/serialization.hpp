#pragma once

#include <optional>
#include <string>

#include "qk/corpus.hpp"
#include "qk/graded_algebra.hpp"

namespace qk {

/// JSON presentation document, format 1. Relation paths list arrow names in
/// the order they are applied (first applied first); the loader reverses them
/// into the written order used internally. Coefficients are rational strings.
struct PresentationDocument {
  Presentation presentation;
  std::optional<GradingSpec> grading;
  friend bool operator==(const PresentationDocument &, const PresentationDocument &) = default;
};

/// Throws ValidationError with the JSON location or the offending field.
PresentationDocument parse_presentation(const std::string &text);
/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string serialize_presentation(const PresentationDocument &doc);

PresentationDocument document_of(const CorpusEntry &entry);

} // namespace qk
