// Words over single-letter generators (lowercase = generator, uppercase = inverse),
// presentations, symmetrized sets, pieces and small-cancellation checks.
#pragma once

#include <json.hpp>

#include <algorithm>
#include <array>
#include <functional>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace tits {

using Word = std::string;

inline char inv(char x) { return std::islower((unsigned char)x) ? char(std::toupper((unsigned char)x)) : char(std::tolower((unsigned char)x)); }
inline char gen(char x) { return char(std::tolower((unsigned char)x)); }
inline bool positive(char x) { return std::islower((unsigned char)x) != 0; }

inline Word inverse(const Word& w) {
    Word r(w.rbegin(), w.rend());
    for (char& x : r) x = inv(x);
    return r;
}

inline Word rotate(const Word& w, std::size_t k) {
    if (w.empty()) return w;
    k %= w.size();
    return w.substr(k) + w.substr(0, k);
}

inline Word free_reduce(const Word& w) {
    Word out;
    for (char x : w) {
        if (!out.empty() && out.back() == inv(x)) out.pop_back();
        else out.push_back(x);
    }
    return out;
}

inline Word cyclic_reduce(const Word& w) {
    Word r = free_reduce(w);
    std::size_t i = 0, j = r.size();
    while (j - i >= 2 && r[i] == inv(r[j - 1])) { ++i; --j; }
    return r.substr(i, j - i);
}

inline bool is_cyclically_reduced(const Word& w) { return cyclic_reduce(w) == w; }

// least rotation and the shift producing it
inline std::pair<Word, std::size_t> least_rotation(const Word& w) {
    Word best = w;
    std::size_t at = 0;
    for (std::size_t k = 1; k < w.size(); ++k) {
        Word r = rotate(w, k);
        if (r < best) { best = r; at = k; }
    }
    return {best, at};
}

// p_m(x, y) = xyxy... with m letters
inline Word p_m(char x, char y, int m) {
    Word w;
    for (int i = 0; i < m; ++i) w.push_back(i % 2 ? y : x);
    return w;
}

inline Word dihedral_relator(char x, char y, int m) { return p_m(x, y, m) + inverse(p_m(y, x, m)); }

inline void check_word(const Word& w) {
    for (char x : w)
        if (!std::isalpha((unsigned char)x)) throw std::invalid_argument(std::string("bad letter '") + x + "' in word " + w);
}

struct Presentation {
    std::vector<char> generators;
    std::vector<Word> relators;
};

inline Presentation presentation_from_json(const nlohmann::json& j) {
    Presentation p;
    for (const auto& g : j.at("generators")) {
        std::string s = g.get<std::string>();
        if (s.size() != 1 || !std::islower((unsigned char)s[0])) throw std::invalid_argument("generator names are single lowercase letters: " + s);
        p.generators.push_back(s[0]);
    }
    for (const auto& r : j.at("relators")) {
        Word w = r.get<std::string>();
        check_word(w);
        for (char x : w)
            if (std::find(p.generators.begin(), p.generators.end(), gen(x)) == p.generators.end())
                throw std::invalid_argument("relator " + w + " uses an undeclared generator");
        p.relators.push_back(w);
    }
    return p;
}

inline nlohmann::json presentation_to_json(const Presentation& p) {
    nlohmann::json j;
    j["generators"] = nlohmann::json::array();
    for (char g : p.generators) j["generators"].push_back(std::string(1, g));
    j["relators"] = p.relators;
    return j;
}

inline std::string presentation_str(const Presentation& p) {
    std::string s = "<";
    for (std::size_t i = 0; i < p.generators.size(); ++i) s += (i ? "," : "") + std::string(1, p.generators[i]);
    s += " |";
    for (std::size_t i = 0; i < p.relators.size(); ++i) s += (i ? ", " : " ") + p.relators[i];
    return s + ">";
}

// One entry per position: relator index, shift, orientation.  Equal words from
// different positions are kept apart (periodic relators overlap themselves).
struct SymElement {
    Word word;
    int relator = 0;
    int shift = 0;
    bool inverted = false;
};

inline std::vector<SymElement> symmetrize(const Presentation& p) {
    std::vector<SymElement> out;
    for (int i = 0; i < int(p.relators.size()); ++i) {
        const Word& r = p.relators[i];
        if (r.empty()) continue;
        for (int inv_ = 0; inv_ < 2; ++inv_) {
            Word base = inv_ ? inverse(r) : r;
            for (int k = 0; k < int(r.size()); ++k) out.push_back({rotate(base, k), i, k, inv_ == 1});
        }
    }
    return out;
}

inline std::set<Word> symmetrized_words(const Presentation& p) {
    std::set<Word> s;
    for (const auto& e : symmetrize(p)) s.insert(e.word);
    return s;
}

struct PieceTable {
    std::vector<SymElement> elements;
    // longest[i][k]: longest piece starting at position k of element i
    std::vector<std::vector<int>> longest;
    std::set<Word> pieces;
    int max_length = 0;
    Word max_piece;
};

inline PieceTable compute_pieces(const Presentation& p) {
    PieceTable t;
    t.elements = symmetrize(p);
    const auto& el = t.elements;
    // maximal common prefix with any other position, capped below the full relator
    std::vector<int> prefix(el.size(), 0);
    for (std::size_t i = 0; i < el.size(); ++i)
        for (std::size_t j = 0; j < el.size(); ++j) {
            if (i == j) continue;
            const Word &x = el[i].word, &y = el[j].word;
            int n = 0;
            while (n < int(x.size()) && n < int(y.size()) && x[n] == y[n]) ++n;
            n = std::min<int>(n, int(x.size()) - 1);
            prefix[i] = std::max(prefix[i], n);
        }
    for (std::size_t i = 0; i < el.size(); ++i) {
        const Word& x = el[i].word;
        for (int l = 1; l <= prefix[i]; ++l) t.pieces.insert(x.substr(0, l));
        if (prefix[i] > t.max_length || (prefix[i] == t.max_length && prefix[i] > 0 && x.substr(0, prefix[i]) < t.max_piece)) {
            t.max_length = prefix[i];
            t.max_piece = x.substr(0, prefix[i]);
        }
    }
    // element i shifted by k is the element with the same relator/orientation and shift+k
    std::map<std::tuple<int, bool, int>, std::size_t> pos;
    for (std::size_t i = 0; i < el.size(); ++i) pos[{el[i].relator, el[i].inverted, el[i].shift}] = i;
    t.longest.resize(el.size());
    for (std::size_t i = 0; i < el.size(); ++i) {
        int n = int(el[i].word.size());
        t.longest[i].resize(n);
        for (int k = 0; k < n; ++k) t.longest[i][k] = prefix[pos.at({el[i].relator, el[i].inverted, (el[i].shift + k) % n})];
    }
    return t;
}

inline nlohmann::json piece_table_json(const PieceTable& t) {
    nlohmann::json j;
    j["max_length"] = t.max_length;
    j["max_piece"] = t.max_piece;
    std::vector<Word> ps(t.pieces.begin(), t.pieces.end());
    std::sort(ps.begin(), ps.end(), [](const Word& a, const Word& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
    j["pieces"] = ps;
    return j;
}

struct ScVerdict {
    std::string condition;
    bool holds = true;
    std::string detail;
    std::vector<Word> witness;  // pieces (C, B6) or relator cycle (T)
    Word witness_relator;
};

inline nlohmann::json verdict_json(const ScVerdict& v) {
    nlohmann::json j{{"condition", v.condition}, {"holds", v.holds}, {"detail", v.detail}};
    if (!v.holds) j["witness"] = {{"relator", v.witness_relator}, {"path", v.witness}};
    return j;
}

// C(n): no element is a product of fewer than n pieces.
inline ScVerdict check_C(const PieceTable& t, int n) {
    ScVerdict v{"C(" + std::to_string(n) + ")", true, "", {}, {}};
    int best = -1;
    for (std::size_t i = 0; i < t.elements.size(); ++i) {
        const Word& w = t.elements[i].word;
        int L = int(w.size());
        const int INF = 1 << 29;
        std::vector<int> dp(L + 1, INF), from(L + 1, -1);
        dp[0] = 0;
        for (int k = 0; k < L; ++k) {
            if (dp[k] == INF) continue;
            for (int l = 1; l <= t.longest[i][k] && k + l <= L; ++l)
                if (dp[k] + 1 < dp[k + l]) { dp[k + l] = dp[k] + 1; from[k + l] = k; }
        }
        if (dp[L] < n && (best < 0 || dp[L] < best)) {
            best = dp[L];
            v.holds = false;
            v.witness.clear();
            for (int k = L; k > 0; k = from[k]) v.witness.insert(v.witness.begin(), w.substr(from[k], k - from[k]));
            v.witness_relator = w;
        }
    }
    v.detail = v.holds ? "no element is a product of fewer than " + std::to_string(n) + " pieces"
                       : v.witness_relator + " is a product of " + std::to_string(best) + " pieces";
    return v;
}

// B(6): every subpath of an element made of at most 3 pieces has length at most half the element.
inline ScVerdict check_B6(const PieceTable& t) {
    ScVerdict v{"B(6)", true, "", {}, {}};
    int worst = 0;
    for (std::size_t i = 0; i < t.elements.size(); ++i) {
        const Word& w = t.elements[i].word;
        int L = int(w.size());
        // reach[k][c]: furthest total length from k with at most c pieces, capped at L
        std::vector<std::array<int, 4>> reach(L + 1, {0, 0, 0, 0});
        std::vector<std::array<int, 4>> first(L + 1, {0, 0, 0, 0});
        for (int c = 1; c <= 3; ++c)
            for (int k = L - 1; k >= 0; --k) {
                // pieces start at position k of the element read cyclically; stay within one lap
                reach[k][c] = 0;
                int lim = t.longest[i][k];
                for (int l = 1; l <= lim; ++l) {
                    int tot = l;
                    int nk = (k + l) % L;
                    int rest = (c > 1) ? reach[nk][c - 1] : 0;
                    tot = std::min(L, l + rest);
                    if (tot > reach[k][c]) { reach[k][c] = tot; first[k][c] = l; }
                }
            }
        int k0 = 0;
        if (reach[k0][3] * 2 > L && reach[k0][3] > worst) {
            worst = reach[k0][3];
            v.holds = false;
            v.witness.clear();
            int k = k0, c = 3, left = reach[k0][3];
            while (c > 0 && left > 0 && first[k][c] > 0) {
                int l = std::min(first[k][c], left);
                v.witness.push_back(rotate(w, k).substr(0, l));
                left -= l;
                k = (k + l) % L;
                --c;
            }
            v.witness_relator = w;
        }
    }
    v.detail = v.holds ? "every concatenation of at most 3 pieces is at most half its relator"
                       : "pieces of total length " + std::to_string(worst) + " inside " + v.witness_relator;
    return v;
}

// T(q) on a presentation: no cyclic sequence r1..rh (3 <= h < q) of symmetrized words, no
// consecutive inverse pair, where every product r_i r_{i+1} cancels at the junction.
inline ScVerdict check_T(const Presentation& p, int q) {
    ScVerdict v{"T(" + std::to_string(q) + ")", true, "", {}, {}};
    std::vector<Word> nodes;
    for (const auto& w : symmetrized_words(p)) nodes.push_back(w);
    int n = int(nodes.size());
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (nodes[i].back() == inv(nodes[j].front()) && nodes[j] != inverse(nodes[i])) adj[i].push_back(j);
    for (int h = 3; h < q && v.holds; ++h) {
        for (int s = 0; s < n && v.holds; ++s) {
            // closed walks of length h from s, depth-first in lexicographic order
            std::vector<int> path{s};
            std::function<bool()> dfs = [&]() -> bool {
                if (int(path.size()) == h) {
                    int last = path.back();
                    return std::find(adj[last].begin(), adj[last].end(), s) != adj[last].end();
                }
                for (int nx : adj[path.back()]) {
                    path.push_back(nx);
                    if (dfs()) return true;
                    path.pop_back();
                }
                return false;
            };
            if (dfs()) {
                v.holds = false;
                for (int x : path) v.witness.push_back(nodes[x]);
                v.witness_relator = nodes[s];
                v.detail = "cancelling cycle of length " + std::to_string(h);
            }
        }
    }
    if (v.holds) v.detail = "no cancelling relator cycle of length 3.." + std::to_string(q - 1);
    return v;
}

}  // namespace tits
