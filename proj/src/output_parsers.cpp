#include "swproc/output_parsers.hpp"

#include <algorithm>
#include <cctype>

namespace swproc {

namespace {

struct FencedBlock {
    std::string info;     // text after the opening backticks, trimmed
    std::string content;  // lines between the fences
    std::size_t offset;   // byte offset of the content in the reply
};

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string to_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

std::vector<FencedBlock> find_fenced_blocks(const std::string& reply) {
    std::vector<FencedBlock> blocks;
    std::size_t pos = 0;
    bool in_fence = false;
    FencedBlock current;
    while (pos <= reply.size()) {
        const std::size_t eol = std::min(reply.find('\n', pos), reply.size());
        const std::string line = reply.substr(pos, eol - pos);
        const std::string stripped = trim(line);
        if (!in_fence) {
            if (stripped.rfind("```", 0) == 0) {
                in_fence = true;
                current = FencedBlock{};
                current.info = trim(stripped.substr(3));
                current.offset = eol + 1;
            }
        } else {
            if (stripped == "```") {
                if (!current.content.empty() && current.content.back() == '\n')
                    current.content.pop_back();
                blocks.push_back(std::move(current));
                in_fence = false;
            } else {
                current.content += line;
                current.content += '\n';
            }
        }
        if (eol >= reply.size()) break;
        pos = eol + 1;
    }
    if (in_fence) {  // unterminated fence: keep what we have
        if (!current.content.empty() && current.content.back() == '\n')
            current.content.pop_back();
        blocks.push_back(std::move(current));
    }
    return blocks;
}

Json parse_json_at(const std::string& text, std::size_t base_offset) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw MalformedDoc(e.what(), base_offset + (e.byte > 0 ? e.byte - 1 : 0));
    }
}

/// Pulls a path out of a first-line comment header, or "" if the line is
/// not a header. Recognized forms: <!-- p -->, // p, # p.
std::string header_path(const std::string& first_line) {
    const std::string s = trim(first_line);
    std::string candidate;
    if (s.rfind("<!--", 0) == 0 && s.size() >= 7 && s.substr(s.size() - 3) == "-->") {
        candidate = trim(s.substr(4, s.size() - 7));
    } else if (s.rfind("//", 0) == 0) {
        candidate = trim(s.substr(2));
    } else if (s.rfind("#", 0) == 0 && s.rfind("#!", 0) != 0) {
        candidate = trim(s.substr(1));
    } else {
        return "";
    }
    if (candidate.empty()) return "";
    if (candidate.find_first_of(" \t") != std::string::npos) return "";
    if (candidate.find('.') == std::string::npos && candidate.find('/') == std::string::npos)
        return "";
    if (!is_safe_relative_path(candidate)) return "";
    return candidate;
}

std::string language_default(const std::string& info) {
    const std::string lang = to_lower(info.substr(0, info.find_first_of(" \t")));
    if (lang == "html") return "index.html";
    if (lang == "css") return "style.css";
    if (lang == "js" || lang == "javascript") return "script.js";
    if (lang == "python" || lang == "py") return "main.py";
    return "";
}

std::string comment_header_for(const std::string& path) {
    const auto dot = path.rfind('.');
    const std::string ext = dot == std::string::npos ? "" : to_lower(path.substr(dot + 1));
    if (ext == "html" || ext == "htm" || ext == "xml" || ext == "md")
        return "<!-- " + path + " -->";
    if (ext == "py" || ext == "sh" || ext == "rb" || ext == "yaml" || ext == "yml" ||
        ext == "toml")
        return "# " + path;
    return "// " + path;
}

std::string language_for_serialization(const CodeFile& file) {
    if (!file.language.empty()) return file.language;
    const auto dot = file.path.rfind('.');
    const std::string ext = dot == std::string::npos ? "" : to_lower(file.path.substr(dot + 1));
    if (ext == "html" || ext == "htm") return "html";
    if (ext == "css") return "css";
    if (ext == "js") return "js";
    if (ext == "py") return "python";
    if (ext == "json") return "json";
    if (ext == "md") return "md";
    return "";
}

bool is_word_at(const std::string& upper, std::size_t pos, const std::string& word) {
    if (upper.compare(pos, word.size(), word) != 0) return false;
    if (pos > 0 && std::isalpha(static_cast<unsigned char>(upper[pos - 1]))) return false;
    const std::size_t after = pos + word.size();
    if (after < upper.size() && std::isalpha(static_cast<unsigned char>(upper[after])))
        return false;
    return true;
}

bool extract_cases_from_json(const Json& doc, std::vector<TestCaseResult>& out) {
    const Json* arr = nullptr;
    if (doc.is_array()) {
        arr = &doc;
    } else if (doc.is_object() && doc.contains("test_cases") && doc["test_cases"].is_array()) {
        arr = &doc["test_cases"];
    } else {
        return false;
    }
    for (const Json& entry : *arr) {
        if (!entry.is_object()) continue;
        TestCaseResult c;
        c.name = entry.value("name", "case_" + std::to_string(out.size() + 1));
        if (entry.contains("verdict") && entry["verdict"].is_string()) {
            c.passed = to_lower(entry["verdict"].get<std::string>()) == "pass";
        } else if (entry.contains("passed") && entry["passed"].is_boolean()) {
            c.passed = entry["passed"].get<bool>();
        } else {
            continue;
        }
        out.push_back(std::move(c));
    }
    return true;
}

} // namespace

std::size_t TestReport::failed() const {
    return static_cast<std::size_t>(
        std::count_if(cases.begin(), cases.end(),
                      [](const TestCaseResult& c) { return !c.passed; }));
}

std::vector<std::string> TestReport::failed_names() const {
    std::vector<std::string> names;
    for (const TestCaseResult& c : cases)
        if (!c.passed) names.push_back(c.name);
    return names;
}

bool is_safe_relative_path(const std::string& candidate) {
    if (candidate.empty()) return false;
    if (candidate.front() == '/') return false;
    if (candidate.find('\\') != std::string::npos) return false;
    if (candidate.find(':') != std::string::npos) return false;
    std::size_t pos = 0;
    while (pos <= candidate.size()) {
        const std::size_t next = std::min(candidate.find('/', pos), candidate.size());
        const std::string segment = candidate.substr(pos, next - pos);
        if (segment.empty() || segment == "." || segment == "..") return false;
        pos = next + 1;
        if (next == candidate.size()) break;
    }
    return true;
}

namespace {

/// The shared recovery ladder: bare payload, then fenced blocks, then the
/// outermost brace span. Returns an object or an array.
Json recover_json_payload(const std::string& reply) {
    const std::string bare = trim(reply);

    if (!bare.empty() && (bare.front() == '{' || bare.front() == '[')) {
        try {
            return Json::parse(bare);
        } catch (const Json::parse_error&) {
            // fall through to fence / substring recovery
        }
    }
    for (const FencedBlock& block : find_fenced_blocks(reply)) {
        const std::string body = trim(block.content);
        if (body.empty() || (body.front() != '{' && body.front() != '[')) continue;
        return parse_json_at(body, block.offset);
    }
    const std::size_t open = reply.find('{');
    const std::size_t close = reply.rfind('}');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw MalformedDoc("no JSON document found in reply", 0);
    return parse_json_at(reply.substr(open, close - open + 1), open);
}

} // namespace

Json parse_structured_doc(const std::string& reply) {
    Json doc = recover_json_payload(reply);
    if (!doc.is_object())
        throw MalformedDoc("expected a JSON object", 0);
    return doc;
}

CodeBundle parse_code_bundle(const std::string& reply) {
    const std::vector<FencedBlock> blocks = find_fenced_blocks(reply);
    if (blocks.empty()) throw NoCodeBlocks();

    CodeBundle bundle;
    std::size_t ordinal = 0;
    for (const FencedBlock& block : blocks) {
        ++ordinal;
        std::string content = block.content;
        const std::size_t first_eol = std::min(content.find('\n'), content.size());
        std::string path = header_path(content.substr(0, first_eol));
        if (!path.empty()) {
            content = first_eol >= content.size() ? "" : content.substr(first_eol + 1);
        } else {
            path = language_default(block.info);
            if (path.empty()) path = "file_" + std::to_string(ordinal) + ".txt";
        }
        auto existing = std::find_if(bundle.files.begin(), bundle.files.end(),
                                     [&](const CodeFile& f) { return f.path == path; });
        if (existing != bundle.files.end()) {
            existing->content = std::move(content);
            existing->language = block.info;
            ++bundle.replaced;
        } else {
            bundle.files.push_back({std::move(path), std::move(content), block.info});
        }
    }
    return bundle;
}

std::string serialize_code_bundle(const CodeBundle& bundle) {
    std::string out;
    for (const CodeFile& file : bundle.files) {
        if (!out.empty()) out += "\n";
        out += "```" + language_for_serialization(file) + "\n";
        out += comment_header_for(file.path) + "\n";
        out += file.content;
        if (!file.content.empty() && file.content.back() != '\n') out += '\n';
        out += "```\n";
    }
    return out;
}

TestReport parse_test_report(const std::string& reply) {
    TestReport report;

    try {
        extract_cases_from_json(recover_json_payload(reply), report.cases);
    } catch (const MalformedDoc&) {
        // fall through to the line-based scan
    }
    if (!report.cases.empty()) return report;

    std::size_t pos = 0;
    while (pos <= reply.size()) {
        const std::size_t eol = std::min(reply.find('\n', pos), reply.size());
        std::string line = trim(reply.substr(pos, eol - pos));
        std::string upper = line;
        std::transform(upper.begin(), upper.end(), upper.begin(),
                       [](unsigned char c) { return std::toupper(c); });
        for (const std::string& word : {std::string("PASSED"), std::string("FAILED"),
                                        std::string("PASS"), std::string("FAIL")}) {
            const std::size_t at = upper.find(word);
            if (at == std::string::npos || !is_word_at(upper, at, word)) continue;
            TestCaseResult c;
            c.passed = word[0] == 'P';
            std::string name = line.substr(0, at) + line.substr(at + word.size());
            const char* junk = " \t-:[]().*";
            const std::size_t b = name.find_first_not_of(junk);
            const std::size_t e = name.find_last_not_of(junk);
            c.name = b == std::string::npos ? "case_" + std::to_string(report.cases.size() + 1)
                                            : name.substr(b, e - b + 1);
            report.cases.push_back(std::move(c));
            break;
        }
        if (eol >= reply.size()) break;
        pos = eol + 1;
    }
    if (report.cases.empty()) throw EmptyReport();
    return report;
}

} // namespace swproc
