#include "fpa/diagnostics.hpp"

#include <algorithm>

namespace fpa {

bool has_errors(const std::vector<ParseDiagnostic>& diagnostics) {
    return std::any_of(diagnostics.begin(), diagnostics.end(),
                       [](const ParseDiagnostic& d) { return d.severity == Severity::Error; });
}

bool has_syntax_errors(const std::vector<ParseDiagnostic>& diagnostics) {
    return std::any_of(diagnostics.begin(), diagnostics.end(), [](const ParseDiagnostic& d) {
        return d.severity == Severity::Error && d.kind == DiagnosticKind::Syntax;
    });
}

bool has_semantic_errors(const std::vector<ParseDiagnostic>& diagnostics) {
    return std::any_of(diagnostics.begin(), diagnostics.end(), [](const ParseDiagnostic& d) {
        return d.severity == Severity::Error && d.kind == DiagnosticKind::Semantic;
    });
}

}  // namespace fpa
