#ifndef FPA_DIAGNOSTICS_HPP
#define FPA_DIAGNOSTICS_HPP

#include <string>
#include <vector>

namespace fpa {

enum class Severity {
    Error,
    Warning,
};

// Syntax: the text itself is malformed or structurally incomplete.
// Semantic: well-formed entries whose values violate a domain invariant.
// The CLI maps the two kinds to distinct exit statuses.
enum class DiagnosticKind {
    Syntax,
    Semantic,
};

struct ParseDiagnostic {
    Severity severity = Severity::Error;
    DiagnosticKind kind = DiagnosticKind::Syntax;
    int line = 1;  // 1-based position in the source text
    std::string message;

    bool operator==(const ParseDiagnostic&) const = default;
};

bool has_errors(const std::vector<ParseDiagnostic>& diagnostics);
bool has_syntax_errors(const std::vector<ParseDiagnostic>& diagnostics);
bool has_semantic_errors(const std::vector<ParseDiagnostic>& diagnostics);

}  // namespace fpa

#endif  // FPA_DIAGNOSTICS_HPP
