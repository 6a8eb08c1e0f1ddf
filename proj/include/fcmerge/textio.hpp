#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "closed_set.hpp"
#include "errors.hpp"
#include "merging.hpp"
#include "revision.hpp"
#include "syntax.hpp"

// Concrete syntax:
//
//   program := stmt*
//   stmt    := (body "->")? literal "."
//   body    := literal ("," literal)*
//   literal := "-"? atom
//   atom    := [a-zA-Z_][a-zA-Z0-9_]*
//
// "%" starts a comment that runs to the end of the line. Profiles separate
// their programs with lines holding only "---".

namespace fcmerge {

namespace detail {

class Lexer {
  public:
    enum class Kind { Atom, Minus, Comma, Arrow, Dot, End };
    struct Token {
        Kind kind;
        std::string_view text;
        std::size_t line;
        std::size_t column;
    };

    Lexer(std::string_view text, std::size_t first_line) : text_(text), line_(first_line), last_line_(first_line) {}

    Token next() {
        skip_blank();
        if (pos_ >= text_.size()) return {Kind::End, {}, last_line_, last_column_};
        std::size_t line = line_, column = column_, start = pos_;
        char c = text_[pos_];
        if (is_identifier(std::string_view(&c, 1))) {
            while (pos_ < text_.size() && is_identifier_tail(text_[pos_])) advance();
            return {Kind::Atom, text_.substr(start, pos_ - start), line, column};
        }
        if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
            advance();
            advance();
            return {Kind::Arrow, text_.substr(start, 2), line, column};
        }
        advance();
        switch (c) {
            case '-': return {Kind::Minus, text_.substr(start, 1), line, column};
            case ',': return {Kind::Comma, text_.substr(start, 1), line, column};
            case '.': return {Kind::Dot, text_.substr(start, 1), line, column};
            default: break;
        }
        throw SourceError(line, column, "unexpected character '" + std::string(1, c) + "'");
    }

  private:
    static bool is_identifier_tail(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    }

    void advance(bool token = true) {
        if (token) {
            last_line_ = line_;
            last_column_ = column_;
        }
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_blank() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance(false);
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance(false);
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_;
    std::size_t column_ = 1;
    // Position of the last token character; errors at end of input point there.
    std::size_t last_line_;
    std::size_t last_column_ = 1;
};

class Parser {
  public:
    Parser(std::string_view text, std::size_t first_line) : lexer_(text, first_line) { shift(); }

    Program program() {
        Program out;
        while (tok_.kind != Lexer::Kind::End) out.insert(statement());
        return out;
    }

  private:
    using Kind = Lexer::Kind;

    void shift() { tok_ = lexer_.next(); }

    [[noreturn]] void fail(const std::string& what) const {
        std::string found = tok_.kind == Kind::End ? "end of input" : "'" + std::string(tok_.text) + "'";
        throw SourceError(tok_.line, tok_.column, what + ", found " + found);
    }

    Literal literal() {
        bool negative = false;
        if (tok_.kind == Kind::Minus) {
            negative = true;
            shift();
        }
        if (tok_.kind != Kind::Atom) fail("expected an atom");
        Literal l(std::string(tok_.text), negative);
        shift();
        return l;
    }

    Rule statement() {
        std::vector<Literal> lits{literal()};
        while (tok_.kind == Kind::Comma) {
            shift();
            lits.push_back(literal());
        }
        if (tok_.kind == Kind::Arrow) {
            shift();
            Literal head = literal();
            expect_dot();
            return Rule(std::move(lits), std::move(head));
        }
        if (lits.size() > 1) fail("expected '->' after rule body");
        expect_dot();
        return Rule::fact(std::move(lits.front()));
    }

    void expect_dot() {
        if (tok_.kind != Kind::Dot) fail("expected '.'");
        shift();
    }

    Lexer lexer_;
    Lexer::Token tok_{};
};

}  // namespace detail

inline Program parse_program(std::string_view text) { return detail::Parser(text, 1).program(); }

/// Programs separated by "---" lines, in file order. Blank or comment-only
/// sections are skipped; no program at all is an EmptyProfile.
inline Profile parse_profile(std::string_view text) {
    std::vector<Program> members;
    std::size_t line_no = 1, section_start_line = 1, section_begin = 0, pos = 0;
    auto flush = [&](std::size_t end) {
        Program p = detail::Parser(text.substr(section_begin, end - section_begin), section_start_line).program();
        if (!p.empty()) members.push_back(std::move(p));
    };
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        auto first = line.find_first_not_of(" \t\r");
        auto last = line.find_last_not_of(" \t\r");
        if (first != std::string_view::npos && line.substr(first, last - first + 1) == "---") {
            flush(pos);
            section_begin = std::min(eol + 1, text.size());
            section_start_line = line_no + 1;
        }
        pos = eol + 1;
        ++line_no;
    }
    flush(text.size());
    if (members.empty()) throw EmptyProfile();
    return Profile(std::move(members));
}

inline std::string render(const Program& p) { return to_string(p); }
inline std::string render(const ClosedSet& s) { return to_string(s); }

inline std::string render(const Profile& profile) {
    std::string out;
    for (std::size_t i = 0; i < profile.size(); ++i) {
        if (i) out += "---\n";
        out += to_string(profile.members()[i]);
    }
    return out;
}

inline std::string render(const Flock& flock) {
    std::string out;
    for (std::size_t i = 0; i < flock.size(); ++i) {
        if (i) out += "---\n";
        out += to_string(flock.members()[i]);
    }
    return out;
}

}  // namespace fcmerge

namespace fcmerge {

/// Reads a rendered literal set back: "a, b, -c", "" or "#bottom".
inline ClosedSet parse_closed_set(std::string_view text) {
    auto trim = [](std::string_view s) {
        auto b = s.find_first_not_of(" \t\r\n");
        if (b == std::string_view::npos) return std::string_view{};
        return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
    };
    text = trim(text);
    if (text == "#bottom") return ClosedSet::bottom();
    std::vector<Literal> lits;
    std::size_t column = 1;
    while (!text.empty()) {
        auto comma = text.find(',');
        std::string_view item = trim(text.substr(0, comma));
        bool negative = !item.empty() && item.front() == '-';
        if (negative) item.remove_prefix(1);
        if (!is_identifier(item)) throw SourceError(1, column, "malformed literal '" + std::string(item) + "'");
        lits.emplace_back(std::string(item), negative);
        if (comma == std::string_view::npos) break;
        column += comma + 1;
        text.remove_prefix(comma + 1);
    }
    return ClosedSet(std::move(lits));
}

}  // namespace fcmerge
