#ifndef ONEMAP_CERTIFICATE_HPP
#define ONEMAP_CERTIFICATE_HPP

#include <string>
#include <utility>
#include <vector>

namespace onemap {

enum class Verdict { Accept, Reject, Indeterminate };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Accept: return "accept";
        case Verdict::Reject: return "reject";
        case Verdict::Indeterminate: return "indeterminate";
    }
    return "?";
}

// Structured verdict emitted by every validator and recognizer.
// Witness payloads (embedding, witness graph) live in the specific
// result types; this carries the verdict and the violation log.
struct Certificate {
    Verdict verdict = Verdict::Reject;
    std::vector<std::pair<std::string, std::string>> violations; // (rule, location)
    std::vector<std::string> notes;

    bool accepted() const { return verdict == Verdict::Accept; }

    static Certificate accept() {
        Certificate c;
        c.verdict = Verdict::Accept;
        return c;
    }
    static Certificate reject(std::string rule, std::string location) {
        Certificate c;
        c.verdict = Verdict::Reject;
        c.violations.emplace_back(std::move(rule), std::move(location));
        return c;
    }
    static Certificate indeterminate(std::string why) {
        Certificate c;
        c.verdict = Verdict::Indeterminate;
        c.notes.push_back(std::move(why));
        return c;
    }

    void add_violation(std::string rule, std::string location) {
        verdict = Verdict::Reject;
        violations.emplace_back(std::move(rule), std::move(location));
    }
};

} // namespace onemap

#endif
