#include "sclogic/laws.hpp"

#include <cctype>
#include <initializer_list>
#include <utility>

#include "sclogic/parser.hpp"

namespace scl {

namespace {

// clang-format off
const char* const kCatalog = R"CATALOG(
# Short-circuit law catalog.
# Record format: name | lhs | rhs | free|mem|static | source

# --- sequential axioms, free semantics -----------------------------------
F1   | F                            | !T                                          | free   | Table 1 (F1)
F2   | $x || $y                     | !(!$x && !$y)                               | free   | Table 1 (F2)
F3   | !!$x                         | $x                                          | free   | Table 1 (F3)
F4   | T && $x                      | $x                                          | free   | Table 1 (F4)
F5   | $x || F                      | $x                                          | free   | Table 1 (F5)
F6   | F && $x                      | F                                           | free   | Table 1 (F6)
F7   | ($x && $y) && $z             | $x && ($y && $z)                            | free   | Table 1 (F7)
F8   | !$x && F                     | $x && F                                     | free   | Table 1 (F8)
F9   | ($x && F) || $y              | ($x || T) && $y                             | free   | Table 1 (F9)
F10  | ($x && $y) || ($z && F)      | ($x || ($z && F)) && ($y || ($z && F))      | free   | Table 1 (F10)

# --- sequential axioms, memorizing semantics ------------------------------
Neg  | F                            | !T                                          | mem    | Table 2 (Neg)
Or   | $x || $y                     | !(!$x && !$y)                               | mem    | Table 2 (Or)
Tand | T && $x                      | $x                                          | mem    | Table 2 (Tand)
Abs  | $x && ($x || $y)             | $x                                          | mem    | Table 2 (Abs)
Mem  | ($x || $y) && $z             | (!$x && ($y && $z)) || ($x && $z)           | mem    | Table 2 (Mem)

# --- commutativity, static semantics --------------------------------------
Comm | $x && $y                     | $y && $x                                    | static | Table 4 (Comm)

# --- conditional axioms, free semantics -----------------------------------
CP1  | $x <| T |> $y                | $x                                          | free   | Table 3 (CP1)
CP2  | $x <| F |> $y                | $y                                          | free   | Table 3 (CP2)
CP3  | T <| $x |> F                 | $x                                          | free   | Table 3 (CP3)
CP4  | $x <| ($y <| $z |> $u) |> $v | ($x <| $y |> $v) <| $z |> ($x <| $u |> $v)  | free   | Table 3 (CP4)

# --- conditional memorizing axioms ----------------------------------------
CPmem  | $x <| $y |> ($z <| $u |> ($v <| $y |> $w)) | $x <| $y |> ($z <| $u |> $w) | mem | Sec. 4 (CPmem)
CPmem1 | ($x <| $y |> ($z <| $u |> $v)) <| $u |> $w | ($x <| $y |> $z) <| $u |> $w | mem | Sec. 4 (CPmem1)
CPmem2 | $x <| $y |> (($z <| $y |> $u) <| $v |> $w) | $x <| $y |> ($u <| $v |> $w) | mem | Sec. 4 (CPmem2)
CPmem3 | (($x <| $y |> $z) <| $u |> $v) <| $y |> $w | ($x <| $u |> $v) <| $y |> $w | mem | Sec. 4 (CPmem3)
CPcon1 | $x <| $y |> ($v <| $y |> $w)               | $x <| $y |> $w               | mem | Sec. 4 (CPcon1)
CPcon2 | ($x <| $y |> $z) <| $y |> $w               | $x <| $y |> $w               | mem | Sec. 4 (CPcon2)

# --- conditional static axioms --------------------------------------------
CPs      | F <| $x |> F                                | F                              | static | Sec. 6 (CPs)
CP3s     | ($x <| $y |> $z) <| $y |> F                 | $y <| $x |> F                  | static | Table 5 (CP3s)
CP3s-aux | (($x <| $y |> $z) <| $u |> $v) <| $y |> F   | ($x <| $u |> $v) <| $y |> F    | static | Sec. 6 (Table 5 discussion)

# --- connectives defined from the conditional, free semantics --------------
def-not | !$x       | F <| $x |> T  | free | Sec. 4 (6)
def-and | $x && $y  | $y <| $x |> F | free | Sec. 4 (7)
def-or  | $x || $y  | T <| $x |> $y | free | Sec. 4 (8)
neg-and-cond | !$x && $z | F <| $x |> $z | free | Sec. 4

# --- derived conditional characterisations --------------------------------
ite-or-and   | ($x && $y) || (!$x && $z) | $y <| $x |> $z | mem    | Sec. 4 (9)
ite-and-or   | (!$x && $z) || ($x && $y) | $y <| $x |> $z | mem    | Sec. 4 (10)
ite-conj     | ($x || $z) && (!$x || $y) | $y <| $x |> $z | mem    | Sec. 4 (11)
ite-conj2    | (!$x || $y) && ($x || $z) | $y <| $x |> $z | mem    | Sec. 4 (12)
double-neg   | !!$x                      | $x             | mem    | Sec. 4 (13)
false-not-true | F                       | !T             | free   | Sec. 4 (14)
or-as-cond   | !(!$x && !$y)             | T <| $x |> $y  | static | Sec. 4 (15)
cond-both    | $x <| $y |> $x            | $x             | static | Sec. 6 (16)
cond-else-contract | $x <| $y |> ($z <| $u |> $y) | $x <| $y |> ($z <| $u |> F) | mem    | Sec. 6 (Prop. 6.1 proof)
cond-true-else     | $x <| T |> $y                | $x <| T |> T                | static | Sec. 6 (Prop. 6.1 proof)

# --- memorizing consequences ----------------------------------------------
and-false-neg | $x && F  | !$x && $x | mem | Sec. 3 (1)
idem-and      | $x && $x | $x        | mem | Sec. 3 (Fact 3.1)
M1 | ($x && $y) || (!$x && $z)        | (!$x || $y) && ($x || $z)               | mem | Sec. 3 (M1)
M2 | ($x && $y) || (!$x && $z)        | (!$x && $z) || ($x && $y)               | mem | Sec. 3 (M2)
M3 | (($x && $y) || (!$x && $z)) && $u | ($x && ($y && $u)) || (!$x && ($z && $u)) | mem | Sec. 3 (M3)
LD | $x && ($y || $z)                 | ($x && $y) || ($x && $z)                | mem | Sec. 3 (LD)
M3-comm | (($x && $y) || (!$x && $z)) && $u | (!$x && ($z && $u)) || ($x && ($y && $u)) | mem | Sec. 3 (Prop. 3.1)

# --- appendix A.1 ----------------------------------------------------------
Ar1 | $x && $y        | ($x && F) || ($x && $y) | mem | Appendix A.1 (Ar1)
Ar2 | $x || $y        | (!$x && $y) || $x       | mem | Appendix A.1 (Ar2)
Ar3 | $x || $y        | $x || ($x || $y)        | mem | Appendix A.1 (Ar3)
Ar4 | $x || $y        | $x || (!$x && $y)       | mem | Appendix A.1 (Ar4)
Ar5 | ($x && F) && $y | $x && F                 | mem | Appendix A.1 (Ar5)
Ar6 | $x && ($y && $x) | $x && $y               | mem | Appendix A.1 (Ar6)
Ar7 | ($x && $y) && $x | $x && $y               | mem | Appendix A.1 (Ar7)
a17 | T || $x                           | T                             | mem | Appendix A.1 (17)
a18 | $x                                | (F && $x) || $x               | mem | Appendix A.1 (18)
a19 | !(F && !$x)                       | T                             | mem | Appendix A.1 (19)
a20 | $x || T                           | !$x || $x                     | mem | Appendix A.1 (20)
a21 | !$x || T                          | $x || !$x                     | mem | Appendix A.1 (21)
a22 | ($x || T) && F                    | $x && F                       | mem | Appendix A.1 (22)
a23 | ($x && F) && F                    | $x && F                       | mem | Appendix A.1 (23)
a24 | ($x && F) || (($x && $y) && $z)   | ($x && $y) && $z              | mem | Appendix A.1 (24)
a25 | ($x || $y) && ($y && $z)          | ($x && F) || ($y && $z)       | mem | Appendix A.1 (25)
a26 | ($x || $y) && ($x || $z)          | $x || ($y && ($x || $z))      | mem | Appendix A.1 (26)
a27 | $x || (!$x || $y)                 | $x || !$x                     | mem | Appendix A.1 (27)
a28 | $x || (($x && $z) || $y)          | $x || $y                      | mem | Appendix A.1 (28)
a29 | $x || $y                          | $x || ($y || ($x && $z))      | mem | Appendix A.1 (29)
a30 | $x || ($y && $z)                  | $x || (($x || $y) && $z)      | mem | Appendix A.1 (30)
a31 | !$x || ($y && $z)                 | !$x || (($x && $y) && $z)     | mem | Appendix A.1 (31)

# --- appendix A.2 ----------------------------------------------------------
a32 | $x && ($y && (($x || $z) && $u))  | $x && ($y && $u)              | mem | Appendix A.2 (32)
a33 | $x || ($y || $z)                  | $x || ($y || ($x || $z))      | mem | Appendix A.2 (33)
a34 | !$x || ($y || ($x && $z))         | !$x || ($y || $z)             | mem | Appendix A.2 (34)

# --- appendix A.3 (constant-free static consequences) ----------------------
a35 | ($x && $y) && (($y || $z) && $x)  | $y && $x                      | static | Appendix A.3 (35)
a36 | $x || $y                          | $x || (!$x && $y)             | static | Appendix A.3 (36)
a37 | $x                                | $x || ($x && $y)              | static | Appendix A.3 (37)
a38 | ($x || $y) && ($x || $z)          | $x || ($y && ($x || $z))      | static | Appendix A.3 (38)
a39 | $x && ($x && $y)                  | $x && $y                      | static | Appendix A.3 (39)
idem-or | $x || $x                      | $x                            | static | Appendix A.3 (idempotence)
Tdef    | ($x || !$x) && $y             | $y                            | static | Sec. 6 (Tdef)
)CATALOG";
// clang-format on

std::string strip(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

SemanticsKind parse_kind(const std::string& text) {
    if (text == "free") return SemanticsKind::Free;
    if (text == "mem") return SemanticsKind::Memorizing;
    if (text == "static") return SemanticsKind::Static;
    throw error("unknown semantics '" + text + "' in law record");
}

AxiomSet build_axiom_set(const std::string& name,
                         std::initializer_list<std::pair<const char*, const char*>> eqs) {
    AxiomSet set;
    set.name = name;
    for (const auto& [axiom_name, text] : eqs) {
        std::string s(text);
        std::size_t sep = s.find('=');
        set.axioms.push_back(Equation{axiom_name, parse(s.substr(0, sep)),
                                      parse(s.substr(sep + 1))});
    }
    return set;
}

}  // namespace

std::vector<LawEntry> parse_law_records(std::string_view text) {
    std::vector<LawEntry> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        std::string trimmed = strip(line);
        if (trimmed.empty() || trimmed[0] == '#') continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= trimmed.size(); ++i) {
            // '|' separates fields except inside the "||" and "|>" tokens.
            bool sep = i == trimmed.size();
            if (!sep && trimmed[i] == '|') {
                bool left = i > 0 && (trimmed[i - 1] == '|' || trimmed[i - 1] == '<');
                bool right = i + 1 < trimmed.size() &&
                             (trimmed[i + 1] == '|' || trimmed[i + 1] == '>');
                sep = !left && !right;
            }
            if (sep) {
                fields.push_back(strip(trimmed.substr(start, i - start)));
                start = i + 1;
            }
        }
        if (fields.size() != 5)
            throw error("law record needs 5 fields: " + trimmed);
        LawEntry entry{Equation{fields[0], parse(fields[1]), parse(fields[2])},
                       parse_kind(fields[3]), fields[4]};
        out.push_back(std::move(entry));
    }
    return out;
}

const std::string& law_catalog_text() {
    static const std::string text = kCatalog;
    return text;
}

const std::vector<LawEntry>& law_catalog() {
    static const std::vector<LawEntry> catalog = parse_law_records(kCatalog);
    return catalog;
}

const AxiomSet& axiom_set(const std::string& name) {
    static const AxiomSet eqfscl = build_axiom_set(
        "eqfscl",
        {
            {"f1", "F = !T"},
            {"f2", "$x || $y = !(!$x && !$y)"},
            {"f3", "!!$x = $x"},
            {"f4", "T && $x = $x"},
            {"f5", "$x || F = $x"},
            {"f6", "F && $x = F"},
            {"f7", "($x && $y) && $z = $x && ($y && $z)"},
            {"f8", "!$x && F = $x && F"},
            {"f9", "($x && F) || $y = ($x || T) && $y"},
            {"f10", "($x && $y) || ($z && F) = ($x || ($z && F)) && ($y || ($z && F))"},
        });
    static const AxiomSet eqmscl = build_axiom_set(
        "eqmscl",
        {
            {"neg", "F = !T"},
            {"or", "$x || $y = !(!$x && !$y)"},
            {"tand", "T && $x = $x"},
            {"abs", "$x && ($x || $y) = $x"},
            {"mem", "($x || $y) && $z = (!$x && ($y && $z)) || ($x && $z)"},
        });
    static const AxiomSet eqsscl = build_axiom_set(
        "eqsscl",
        {
            {"neg", "F = !T"},
            {"or", "$x || $y = !(!$x && !$y)"},
            {"tand", "T && $x = $x"},
            {"abs", "$x && ($x || $y) = $x"},
            {"mem", "($x || $y) && $z = (!$x && ($y && $z)) || ($x && $z)"},
            {"comm", "$x && $y = $y && $x"},
        });
    if (name == "eqfscl") return eqfscl;
    if (name == "eqmscl") return eqmscl;
    if (name == "eqsscl") return eqsscl;
    throw error("unknown axiom set '" + name + "'");
}

}  // namespace scl
