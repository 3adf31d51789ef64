#include "cobarlab/word.hpp"

#include <algorithm>
#include <functional>

namespace cobarlab {

int LetterTable::add(const std::string& name, int degree) {
    auto it = ids_.find(name);
    if (it != ids_.end()) {
        if (degrees_[it->second] != degree) throw std::logic_error("letter '" + name + "' re-added with different degree");
        return it->second;
    }
    int id = static_cast<int>(names_.size());
    names_.push_back(name);
    degrees_.push_back(degree);
    ids_[name] = id;
    return id;
}

int LetterTable::id_of(const std::string& name) const {
    auto it = ids_.find(name);
    return it == ids_.end() ? -1 : it->second;
}

int word_degree(const Word& w, const LetterTable& t) {
    int d = 0;
    for (auto l : w) d += t.degree(l);
    return d;
}

std::vector<int> letter_degrees(const Word& w, const LetterTable& t) {
    std::vector<int> out;
    out.reserve(w.size());
    for (auto l : w) out.push_back(t.degree(l));
    return out;
}

std::string word_str(const Word& w, const LetterTable& t, const char* sep) {
    if (w.empty()) return "1";
    std::string s = "[";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += sep;
        s += t.name(w[i]);
    }
    s += "]";
    return s;
}

bool WordOrder::operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return table->name(a[i]) < table->name(b[i]);
    }
    return false;
}

void WordSum::add(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void WordSum::add_sum(const WordSum& o, const Scalar& c) {
    for (const auto& [w, v] : o.terms_) add(w, v * c);
}

void WordSum::scale(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return;
    }
    for (auto& [w, v] : terms_) v *= c;
}

Scalar WordSum::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void WordTensor::add(const std::vector<Word>& slots, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(slots, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void WordTensor::add_tensor(const WordTensor& o, const Scalar& c) {
    for (const auto& [s, v] : o.terms_) add(s, v * c);
}

WordSum concat(const WordSum& a, const WordSum& b) {
    WordSum out(a.field(), a.table());
    for (const auto& [wa, ca] : a) {
        for (const auto& [wb, cb] : b) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add(w, ca * cb);
        }
    }
    return out;
}

WordTensor tensor_algebra_mul(const WordTensor& a, const WordTensor& b, const LetterTable& t) {
    if (a.arity() != 2 || b.arity() != 2) throw std::logic_error("tensor_algebra_mul needs arity 2");
    WordTensor out(a.field(), &t, 2);
    for (const auto& [sa, ca] : a) {
        int deg_y = word_degree(sa[1], t);
        for (const auto& [sb, cb] : b) {
            int deg_xp = word_degree(sb[0], t);
            Word left = sa[0];
            left.insert(left.end(), sb[0].begin(), sb[0].end());
            Word right = sa[1];
            right.insert(right.end(), sb[1].begin(), sb[1].end());
            Scalar c = ca * cb * Scalar::sign(a.field(), deg_y * deg_xp);
            out.add({left, right}, c);
        }
    }
    return out;
}

namespace {

void unshuffle_rec(const Word& w, const std::vector<int>& degs, size_t pos, int n,
                   std::vector<Word>& blocks, std::vector<int>& block_degs, int parity,
                   Field f, WordTensor& out) {
    if (pos == w.size()) {
        out.add(blocks, Scalar::sign(f, parity));
        return;
    }
    // Place letter `pos` into block b. The Koszul sign moves it past every
    // letter already placed in later blocks; since letters are placed in
    // word order, those are exactly the letters currently in blocks > b.
    for (int b = 0; b < n; ++b) {
        int crossed = 0;
        for (int j = b + 1; j < n; ++j) crossed += block_degs[j];
        blocks[b].push_back(w[pos]);
        block_degs[b] += degs[pos];
        unshuffle_rec(w, degs, pos + 1, n, blocks, block_degs, parity + degs[pos] * crossed, f, out);
        blocks[b].pop_back();
        block_degs[b] -= degs[pos];
    }
}

}  // namespace

WordTensor unshuffle(const Word& w, int n, Field f, const LetterTable& t) {
    WordTensor out(f, &t, n);
    std::vector<Word> blocks(n);
    std::vector<int> block_degs(n, 0);
    std::vector<int> degs = letter_degrees(w, t);
    unshuffle_rec(w, degs, 0, n, blocks, block_degs, 0, f, out);
    return out;
}

WordTensor outer(const std::vector<WordSum>& factors, const LetterTable& t) {
    Field f = factors.at(0).field();
    WordTensor out(f, &t, static_cast<int>(factors.size()));
    std::vector<Word> slots(factors.size());
    std::vector<Scalar> coefs(factors.size(), Scalar::one(f));

    std::function<void(size_t, const Scalar&)> rec = [&](size_t i, const Scalar& c) {
        if (i == factors.size()) {
            out.add(slots, c);
            return;
        }
        for (const auto& [w, v] : factors[i]) {
            slots[i] = w;
            rec(i + 1, c * v);
        }
    };
    rec(0, Scalar::one(f));
    return out;
}

}  // namespace cobarlab
