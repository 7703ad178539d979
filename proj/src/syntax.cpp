#include "cardlogic/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace cardlogic {

namespace {

struct Token {
    std::string text;
    int column;  // 1-based
};

std::vector<Token> tokenize_line(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;  // comment to end of line
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
               line[i] != '#')
            ++i;
        out.push_back(Token{line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

bool is_reserved(const std::string& word) {
    static const std::set<std::string> reserved = {"all", "some", "atleast", "more"};
    return reserved.count(lowercase(word)) > 0;
}

bool is_ellipsis(const std::string& word) {
    if (word.size() >= 2 && word.find_first_not_of('.') == std::string::npos) return true;
    return word == "\xE2\x80\xA6";  // the one-character ellipsis
}

Noun parse_noun(const Token& tok, int line_no) {
    std::size_t tildes = 0;
    while (tildes < tok.text.size() && tok.text[tildes] == '~') ++tildes;
    std::string base = tok.text.substr(tildes);
    if (base.empty())
        throw parse_error("expected a noun after '~'", line_no, tok.column);
    if (base.find('~') != std::string::npos)
        throw parse_error("'~' may only prefix a noun: '" + tok.text + "'", line_no,
                          tok.column);
    if (is_reserved(base))
        throw parse_error("'" + base + "' is a reserved word and cannot name a noun",
                          line_no, tok.column);
    // An even stack of complements cancels out.
    return Noun{base, tildes % 2 == 1};
}

// Matches the long natural-language aliases.  Keywords are matched without
// case sensitivity; nouns keep their case.
std::optional<Sentence> parse_alias(const std::vector<Token>& toks, int line_no) {
    auto kw = [&](std::size_t i, const char* word) {
        return i < toks.size() && lowercase(toks[i].text) == word;
    };
    if (toks.size() == 4 && kw(0, "all") && kw(2, "are"))
        return Sentence{Form::All, parse_noun(toks[1], line_no), parse_noun(toks[3], line_no)};
    if (toks.size() == 4 && kw(0, "some") && kw(2, "are"))
        return Sentence{Form::Some, parse_noun(toks[1], line_no), parse_noun(toks[3], line_no)};
    if (toks.size() == 9 && kw(0, "there") && kw(1, "are") && kw(2, "at") && kw(3, "least") &&
        kw(4, "as") && kw(5, "many") && kw(7, "as"))
        return Sentence{Form::AtLeast, parse_noun(toks[6], line_no),
                        parse_noun(toks[8], line_no)};
    if (toks.size() == 6 && kw(0, "there") && kw(1, "are") && kw(2, "more") && kw(4, "than"))
        return Sentence{Form::More, parse_noun(toks[3], line_no), parse_noun(toks[5], line_no)};
    return std::nullopt;
}

Sentence parse_line(const std::vector<Token>& toks, int line_no) {
    for (const Token& t : toks)
        if (is_ellipsis(t.text))
            throw parse_error(
                "a theory must be a finite list of sentences; an ellipsis ('" + t.text +
                    "') suggests an infinite one, which cannot be expressed",
                line_no, t.column);

    if (auto alias = parse_alias(toks, line_no)) return *alias;

    const std::string head = lowercase(toks[0].text);
    static const std::map<std::string, Form> forms = {{"all", Form::All},
                                                      {"some", Form::Some},
                                                      {"atleast", Form::AtLeast},
                                                      {"more", Form::More}};
    auto it = forms.find(head);
    if (it == forms.end())
        throw parse_error("expected one of all/some/atleast/more, got '" + toks[0].text + "'",
                          line_no, toks[0].column);
    if (toks.size() != 3)
        throw parse_error("'" + head + "' takes exactly two nouns", line_no,
                          toks.size() > 3 ? toks[3].column : toks[0].column);
    return Sentence{it->second, parse_noun(toks[1], line_no), parse_noun(toks[2], line_no)};
}

}  // namespace

std::string to_string(const Noun& x) { return x.negated ? "~" + x.base : x.base; }

std::string form_keyword(Form f) {
    switch (f) {
        case Form::All: return "all";
        case Form::Some: return "some";
        case Form::AtLeast: return "atleast";
        case Form::More: return "more";
    }
    return "?";
}

Sentence negate(const Sentence& phi) {
    switch (phi.form) {
        case Form::All: return Sentence{Form::Some, phi.left, complement(phi.right)};
        case Form::Some: return Sentence{Form::All, phi.left, complement(phi.right)};
        case Form::AtLeast: return Sentence{Form::More, phi.right, phi.left};
        case Form::More: return Sentence{Form::AtLeast, phi.right, phi.left};
    }
    throw internal_error("unknown sentence form");
}

std::string to_string(const Sentence& phi) {
    return form_keyword(phi.form) + " " + to_string(phi.left) + " " + to_string(phi.right);
}

TheoryFile parse(const std::string& text) {
    TheoryFile out;
    std::map<Sentence, int> seen;  // sentence -> first line
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::vector<Token> toks = tokenize_line(line);
        if (toks.empty()) continue;
        Sentence s = parse_line(toks, line_no);
        auto [it, inserted] = seen.emplace(s, line_no);
        if (!inserted) {
            out.warnings.push_back("line " + std::to_string(line_no) +
                                   ": duplicate sentence '" + to_string(s) +
                                   "' (first given on line " + std::to_string(it->second) +
                                   "); keeping the first occurrence");
            continue;
        }
        out.items.push_back(
            ParsedSentence{s, SourceLocation{line_no, toks.front().column}});
    }
    return out;
}

Sentence parse_sentence(const std::string& text) {
    TheoryFile f = parse(text);
    if (f.items.size() != 1)
        throw parse_error("expected exactly one sentence", 1, 1);
    return f.items.front().sentence;
}

Noun parse_noun(const std::string& text) {
    std::vector<Token> toks = tokenize_line(text);
    if (toks.size() != 1)
        throw parse_error("expected exactly one noun", 1, 1);
    return parse_noun(toks.front(), 1);
}

std::vector<Noun> atoms_of(const Theory& gamma, const Sentence* phi) {
    std::set<Noun> set;
    auto add = [&](const Noun& x) {
        set.insert(Noun{x.base, false});
        set.insert(Noun{x.base, true});
    };
    for (const Sentence& s : gamma) {
        add(s.left);
        add(s.right);
    }
    if (phi) {
        add(phi->left);
        add(phi->right);
    }
    return std::vector<Noun>(set.begin(), set.end());
}

std::string render(const Theory& gamma) {
    std::string out;
    for (const Sentence& s : gamma) {
        out += to_string(s);
        out += '\n';
    }
    return out;
}

}  // namespace cardlogic
