#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fcmerge {

inline bool is_identifier(std::string_view s) noexcept {
    if (s.empty()) return false;
    auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
    auto digit = [](char c) { return c >= '0' && c <= '9'; };
    if (!alpha(s.front())) return false;
    return std::all_of(s.begin() + 1, s.end(), [&](char c) { return alpha(c) || digit(c); });
}

/// An atom or its negation.
///
/// Literals order by atom first and put the positive literal before the
/// negative one; every canonical rendering relies on this order.
class Literal {
  public:
    Literal(std::string atom, bool negative = false) : atom_(std::move(atom)), negative_(negative) {
        if (!is_identifier(atom_)) throw std::invalid_argument("invalid atom '" + atom_ + "'");
    }
    Literal(const char* atom, bool negative = false) : Literal(std::string(atom), negative) {}

    const std::string& atom() const noexcept { return atom_; }
    bool negative() const noexcept { return negative_; }
    bool positive() const noexcept { return !negative_; }

    Literal operator-() const { return Literal(atom_, !negative_); }
    bool opposes(const Literal& other) const noexcept {
        return atom_ == other.atom_ && negative_ != other.negative_;
    }

    friend bool operator==(const Literal&, const Literal&) = default;
    friend std::strong_ordering operator<=>(const Literal&, const Literal&) = default;

  private:
    std::string atom_;
    bool negative_;
};

inline Literal neg(const Literal& l) { return -l; }

/// `l1, ..., ln -> l`; a fact is a rule with an empty body.
class Rule {
  public:
    Rule(std::vector<Literal> body, Literal head) : body_(std::move(body)), head_(std::move(head)) {
        std::sort(body_.begin(), body_.end());
        body_.erase(std::unique(body_.begin(), body_.end()), body_.end());
    }
    static Rule fact(Literal head) { return Rule({}, std::move(head)); }

    const std::vector<Literal>& body() const noexcept { return body_; }
    const Literal& head() const noexcept { return head_; }
    bool is_fact() const noexcept { return body_.empty(); }

    friend bool operator==(const Rule&, const Rule&) = default;
    friend std::strong_ordering operator<=>(const Rule&, const Rule&) = default;

  private:
    std::vector<Literal> body_;
    Literal head_;
};

/// A finite set of rules. Rules are kept sorted, so equality and iteration
/// order are independent of insertion order.
class Program {
  public:
    using const_iterator = std::vector<Rule>::const_iterator;

    Program() = default;
    Program(std::initializer_list<Rule> rules) : Program(std::vector<Rule>(rules)) {}
    explicit Program(std::vector<Rule> rules) : rules_(std::move(rules)) {
        std::sort(rules_.begin(), rules_.end());
        rules_.erase(std::unique(rules_.begin(), rules_.end()), rules_.end());
    }

    /// Returns false when the rule was already present.
    bool insert(Rule r) {
        auto it = std::lower_bound(rules_.begin(), rules_.end(), r);
        if (it != rules_.end() && *it == r) return false;
        rules_.insert(it, std::move(r));
        return true;
    }
    bool erase(const Rule& r) {
        auto it = std::lower_bound(rules_.begin(), rules_.end(), r);
        if (it == rules_.end() || *it != r) return false;
        rules_.erase(it);
        return true;
    }
    bool contains(const Rule& r) const { return std::binary_search(rules_.begin(), rules_.end(), r); }

    const std::vector<Rule>& rules() const noexcept { return rules_; }
    std::size_t size() const noexcept { return rules_.size(); }
    bool empty() const noexcept { return rules_.empty(); }
    const_iterator begin() const noexcept { return rules_.begin(); }
    const_iterator end() const noexcept { return rules_.end(); }

    Program facts() const {
        Program out;
        for (const auto& r : rules_)
            if (r.is_fact()) out.rules_.push_back(r);
        return out;
    }

    bool subset_of(const Program& other) const {
        return std::includes(other.rules_.begin(), other.rules_.end(), rules_.begin(), rules_.end());
    }

    friend Program operator|(const Program& a, const Program& b) {
        Program out;
        out.rules_.reserve(a.size() + b.size());
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.rules_));
        return out;
    }
    friend Program operator&(const Program& a, const Program& b) {
        Program out;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.rules_));
        return out;
    }
    friend Program operator-(const Program& a, const Program& b) {
        Program out;
        std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.rules_));
        return out;
    }

    friend bool operator==(const Program&, const Program&) = default;
    friend std::strong_ordering operator<=>(const Program& a, const Program& b) {
        return a.rules_ <=> b.rules_;
    }

  private:
    std::vector<Rule> rules_;
};

template <typename Range>
Program facts_of(const Range& literals) {
    std::vector<Rule> rules;
    for (const Literal& l : literals) rules.push_back(Rule::fact(l));
    return Program(std::move(rules));
}

/// Sorted, duplicate-free atoms mentioned anywhere in the program.
inline std::vector<std::string> atoms_of(const Program& p) {
    std::vector<std::string> out;
    for (const auto& r : p) {
        out.push_back(r.head().atom());
        for (const auto& l : r.body()) out.push_back(l.atom());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::string to_string(const Literal& l) { return l.negative() ? "-" + l.atom() : l.atom(); }

inline std::string to_string(const Rule& r) {
    std::string out;
    for (std::size_t i = 0; i < r.body().size(); ++i) {
        if (i) out += ", ";
        out += to_string(r.body()[i]);
    }
    if (!r.is_fact()) out += " -> ";
    out += to_string(r.head());
    out += '.';
    return out;
}

/// One statement per line, each line newline-terminated; "" for the empty program.
inline std::string to_string(const Program& p) {
    std::string out;
    for (const auto& r : p) {
        out += to_string(r);
        out += '\n';
    }
    return out;
}

}  // namespace fcmerge
