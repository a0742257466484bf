#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "swproc/errors.hpp"
#include "swproc/json_io.hpp"

namespace swproc {

/// Raised when a reply that must carry a JSON document does not parse as one.
class MalformedDoc : public Error {
public:
    MalformedDoc(const std::string& what, std::size_t position)
        : Error(what + " (at offset " + std::to_string(position) + ")"), position(position) {}
    std::size_t position;
};

/// Raised when a reply that must carry code contains no fenced block.
class NoCodeBlocks : public Error {
public:
    NoCodeBlocks() : Error("reply contains no fenced code blocks") {}
};

/// Raised when a test reply yields no recognizable case verdicts.
class EmptyReport : public Error {
public:
    EmptyReport() : Error("test reply contains no case verdicts") {}
};

struct CodeFile {
    std::string path;
    std::string content;
    std::string language;  // fence info string, may be empty
};

struct CodeBundle {
    std::vector<CodeFile> files;
    std::size_t replaced = 0;  // duplicate paths where a later block won
};

struct TestCaseResult {
    std::string name;
    bool passed = false;
};

struct TestReport {
    std::vector<TestCaseResult> cases;

    std::size_t failed() const;
    std::vector<std::string> failed_names() const;
};

/// Parses a reply that must be a single JSON object, tolerating a fenced
/// wrapper and prose around it.
Json parse_structured_doc(const std::string& reply);

/// Extracts fenced code blocks into named files. Naming precedence: an
/// in-band path comment on the first line, then a language default, then
/// an ordinal fallback.
CodeBundle parse_code_bundle(const std::string& reply);

/// Renders a bundle back into fenced blocks with path header comments.
std::string serialize_code_bundle(const CodeBundle& bundle);

/// Extracts case verdicts from a test reply (JSON verdict list, with a
/// line-based fallback).
TestReport parse_test_report(const std::string& reply);

/// True if `candidate` is safe to write under a workspace root.
bool is_safe_relative_path(const std::string& candidate);

} // namespace swproc
