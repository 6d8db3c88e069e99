#include "htt/theta.hpp"

#include <sstream>

namespace htt::fincat {

bool theta_valid(const ThetaMorphism& f, const ThetaObject& a, const ThetaObject& b) {
    if (f.level != a.level || a.level != b.level) return false;
    if (a.level == 0) return f.delta.empty() && f.blocks.empty();
    const int m = a.m(), p = b.m();
    if (static_cast<int>(f.delta.size()) != m + 1) return false;
    for (int i = 0; i <= m; ++i) {
        if (f.delta[i] < 0 || f.delta[i] > p) return false;
        if (i > 0 && f.delta[i - 1] > f.delta[i]) return false;
    }
    if (static_cast<int>(f.blocks.size()) != m) return false;
    for (int i = 1; i <= m; ++i) {
        const int lo = f.delta[i - 1], hi = f.delta[i];
        if (static_cast<int>(f.blocks[i - 1].size()) != hi - lo) return false;
        for (int j = lo + 1; j <= hi; ++j)
            if (!theta_valid(f.blocks[i - 1][j - lo - 1], a.children[i - 1],
                             b.children[j - 1]))
                return false;
    }
    return true;
}

std::vector<ThetaMorphism> theta_hom(const ThetaObject& a, const ThetaObject& b) {
    if (a.level != b.level) throw InputError("theta_hom: level mismatch");
    if (a.level == 0) return {ThetaMorphism{0, {}, {}}};
    const int m = a.m(), p = b.m();
    // enumerate monotone delta: [m] -> [p]
    std::vector<std::vector<int>> deltas;
    std::vector<int> cur(m + 1);
    auto rec_delta = [&](auto&& self, int i, int from) -> void {
        if (i > m) {
            deltas.push_back(cur);
            return;
        }
        for (int v = from; v <= p; ++v) {
            cur[i] = v;
            self(self, i + 1, v);
        }
    };
    rec_delta(rec_delta, 0, 0);

    std::vector<ThetaMorphism> out;
    for (const auto& d : deltas) {
        // per i, the candidate blocks for each j in (d[i-1], d[i]]
        std::vector<std::vector<std::vector<ThetaMorphism>>> choices(m);
        bool possible = true;
        for (int i = 1; i <= m && possible; ++i)
            for (int j = d[i - 1] + 1; j <= d[i]; ++j) {
                auto h = theta_hom(a.children[i - 1], b.children[j - 1]);
                if (h.empty()) possible = false;
                choices[i - 1].push_back(std::move(h));
            }
        if (!possible) continue;
        ThetaMorphism f;
        f.level = a.level;
        f.delta = d;
        f.blocks.assign(m, {});
        auto rec_fill = [&](auto&& self, int i, int slot) -> void {
            if (i > m) {
                out.push_back(f);
                return;
            }
            if (slot == static_cast<int>(choices[i - 1].size())) {
                self(self, i + 1, 0);
                return;
            }
            for (const auto& cand : choices[i - 1][slot]) {
                f.blocks[i - 1].push_back(cand);
                self(self, i, slot + 1);
                f.blocks[i - 1].pop_back();
            }
        };
        rec_fill(rec_fill, 1, 0);
    }
    return out;
}

ThetaMorphism theta_identity(const ThetaObject& a) {
    ThetaMorphism f;
    f.level = a.level;
    if (a.level == 0) return f;
    const int m = a.m();
    f.delta.resize(m + 1);
    for (int i = 0; i <= m; ++i) f.delta[i] = i;
    for (int i = 1; i <= m; ++i)
        f.blocks.push_back({theta_identity(a.children[i - 1])});
    return f;
}

ThetaMorphism theta_compose(const ThetaMorphism& g, const ThetaMorphism& f,
                            const ThetaObject& a, const ThetaObject& b,
                            const ThetaObject& c) {
    if (!theta_valid(f, a, b) || !theta_valid(g, b, c))
        throw InputError("theta_compose: endpoints do not match");
    ThetaMorphism h;
    h.level = a.level;
    if (a.level == 0) return h;
    const int m = a.m();
    h.delta.resize(m + 1);
    for (int i = 0; i <= m; ++i) h.delta[i] = g.delta[f.delta[i]];
    h.blocks.assign(m, {});
    for (int i = 1; i <= m; ++i) {
        for (int j = h.delta[i - 1] + 1; j <= h.delta[i]; ++j) {
            // unique k with f.delta(i-1) < k <= f.delta(i), g.delta(k-1) < j <= g.delta(k)
            int kk = -1;
            for (int k = f.delta[i - 1] + 1; k <= f.delta[i]; ++k)
                if (g.delta[k - 1] < j && j <= g.delta[k]) {
                    kk = k;
                    break;
                }
            if (kk < 0) throw InputError("theta_compose: pasting index missing");
            const auto& fik = f.blocks[i - 1][kk - f.delta[i - 1] - 1];
            const auto& gkj = g.blocks[kk - 1][j - g.delta[kk - 1] - 1];
            h.blocks[i - 1].push_back(theta_compose(
                gkj, fik, a.children[i - 1], b.children[kk - 1], c.children[j - 1]));
        }
    }
    return h;
}

std::string theta_print(const ThetaObject& a) {
    if (a.level == 0) return "·";
    std::ostringstream os;
    os << "[" << a.m() << "]";
    if (a.m() > 0) {
        os << "(";
        for (int i = 0; i < a.m(); ++i) os << (i ? "," : "") << theta_print(a.children[i]);
        os << ")";
    }
    return os.str();
}

namespace {

void skip_ws(const std::string& s, size_t& pos) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
}

// Raw parse: "·"/"*" | [m] | [m](c_1,...,c_m). A bare [m] with m >= 1 means
// children are all dots (a Theta_1 object); [0] is level-promotable.
ThetaObject parse_at(const std::string& s, size_t& pos) {
    skip_ws(s, pos);
    if (pos < s.size() && (s[pos] == '*' || s.compare(pos, 2, "\xc2\xb7") == 0)) {
        pos += s[pos] == '*' ? 1 : 2;
        return ThetaObject{0, {}};
    }
    if (pos >= s.size() || s[pos] != '[') throw InputError("theta parse: expected '['");
    ++pos;
    const size_t end = s.find(']', pos);
    if (end == std::string::npos) throw InputError("theta parse: missing ']'");
    const int m = std::stoi(s.substr(pos, end - pos));
    if (m < 0) throw InputError("theta parse: negative m");
    pos = end + 1;
    ThetaObject obj;
    skip_ws(s, pos);
    if (pos < s.size() && s[pos] == '(') {
        ++pos;
        for (int i = 0; i < m; ++i) {
            obj.children.push_back(parse_at(s, pos));
            skip_ws(s, pos);
            if (i + 1 < m) {
                if (pos >= s.size() || s[pos] != ',')
                    throw InputError("theta parse: expected ','");
                ++pos;
            }
        }
        skip_ws(s, pos);
        if (pos >= s.size() || s[pos] != ')')
            throw InputError("theta parse: expected ')'");
        ++pos;
    } else {
        obj.children.assign(m, ThetaObject{0, {}});
    }
    if (static_cast<int>(obj.children.size()) != m)
        throw InputError("theta parse: arity mismatch");
    int lvl = 1;
    for (const auto& c : obj.children) lvl = std::max(lvl, c.level + 1);
    obj.level = lvl;
    // promote childless children ([0]) to the common level
    for (auto& c : obj.children) {
        if (c.level != lvl - 1) {
            if (c.m() == 0 && c.level > 0)
                c.level = lvl - 1;
            else if (!(c.level == 0 && lvl == 1))
                throw InputError("theta parse: child level mismatch");
        }
    }
    return obj;
}

} // namespace

ThetaObject theta_parse(const std::string& text) {
    size_t pos = 0;
    auto obj = parse_at(text, pos);
    skip_ws(text, pos);
    if (pos != text.size()) throw InputError("theta parse: trailing input");
    return obj;
}

} // namespace htt::fincat
