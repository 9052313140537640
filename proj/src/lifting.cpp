#include "shuffle_lab/lifting.hpp"

#include "shuffle_lab/parallel.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace shuffle_lab {

char encode_letter(Letter letter) {
    if (letter.value < 1 || letter.value > Word::max_letter) throw std::invalid_argument("letter out of range");
    switch (letter.sign) {
        case Sign::none: return static_cast<char>(letter.value);
        case Sign::plus: return static_cast<char>(32 + letter.value);
        case Sign::minus: return static_cast<char>(64 + letter.value);
    }
    return 0;
}

Letter decode_letter(char code) {
    const int c = static_cast<unsigned char>(code);
    if (c < 32) return {c, Sign::none};
    if (c < 64) return {c - 32, Sign::plus};
    return {c - 64, Sign::minus};
}

namespace {

bool is_signed_code(char c) { return static_cast<unsigned char>(c) >= 32; }

char flip_code(char c) {
    const int v = static_cast<unsigned char>(c);
    if (v < 32) return c;
    return static_cast<char>(v < 64 ? v + 32 : v - 32);
}

std::string letter_text(Letter l) {
    std::string s = std::to_string(l.value);
    if (l.sign == Sign::plus) s += '+';
    if (l.sign == Sign::minus) s += '-';
    return s;
}

// Sorted code with minus signs folded onto plus; equal keys mean equal evaluations.
std::string evaluation_key(const std::string& code) {
    std::string key = code;
    for (auto& c : key)
        if (static_cast<unsigned char>(c) >= 64) c = static_cast<char>(static_cast<unsigned char>(c) - 32);
    std::sort(key.begin(), key.end());
    return key;
}

}  // namespace

Word::Word(const std::vector<Letter>& letters) {
    code_.reserve(letters.size());
    for (const auto& l : letters) code_.push_back(encode_letter(l));
}

Word Word::from_code(std::string code) {
    for (char c : code) encode_letter(decode_letter(c));
    Word w;
    w.code_ = std::move(code);
    return w;
}

Word Word::parse(const std::string& text) {
    std::vector<Letter> letters;
    const bool tokenised = text.find_first_of(" ,") != std::string::npos;
    std::size_t i = 0;
    auto skip_separators = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
    };
    skip_separators();
    if (text.substr(i) == "ω") return Word{};
    while (i < text.size()) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw std::invalid_argument("bad word: " + text);
        int value = text[i++] - '0';
        if (tokenised)
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) value = 10 * value + (text[i++] - '0');
        Sign sign = Sign::none;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) sign = text[i++] == '+' ? Sign::plus : Sign::minus;
        letters.push_back({value, sign});
        if (tokenised) skip_separators();
    }
    return Word(letters);
}

Letter Word::at(int position) const { return decode_letter(code_.at(static_cast<std::size_t>(position - 1))); }

bool Word::has_signed() const { return std::any_of(code_.begin(), code_.end(), is_signed_code); }

std::string Word::to_string() const {
    if (code_.empty()) return "ω";
    bool wide = false;
    for (char c : code_) wide = wide || decode_letter(c).value > 9;
    std::string s;
    for (char c : code_) {
        if (wide && !s.empty()) s += ' ';
        s += letter_text(decode_letter(c));
    }
    return s;
}

Evaluation evaluation(const Word& w) {
    Evaluation e;
    for (char c : w.code()) {
        const Letter l = decode_letter(c);
        auto& counts = l.sign == Sign::none ? e.unsigned_counts : e.signed_counts;
        if (static_cast<int>(counts.size()) <= l.value) counts.resize(static_cast<std::size_t>(l.value) + 1, 0);
        ++counts[static_cast<std::size_t>(l.value)];
    }
    return e;
}

WordVector WordVector::basis(const Word& w, WordMode mode) {
    WordVector v(mode);
    v.add_term(w, 1);
    return v;
}

WordVector WordVector::empty_word(WordMode mode) { return basis(Word{}, mode); }

int WordVector::length() const { return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.size()); }

Rational WordVector::coefficient(const Word& w) const {
    auto it = terms_.find(w.code());
    return it == terms_.end() ? Rational(0) : it->second;
}

void WordVector::add_term(const Word& w, const Rational& c) {
    if (mode_ == WordMode::plain && w.has_signed()) throw std::invalid_argument("signed letter in a plain word vector");
    if (!terms_.empty() && evaluation_key(terms_.begin()->first) != evaluation_key(w.code()))
        throw std::invalid_argument("word " + w.to_string() + " has a different length or evaluation");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w.code(), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

WordVector& WordVector::operator+=(const WordVector& other) {
    for (const auto& [code, c] : other.terms_) add_term(Word::from_code(code), c);
    return *this;
}

WordVector& WordVector::operator-=(const WordVector& other) {
    for (const auto& [code, c] : other.terms_) add_term(Word::from_code(code), -c);
    return *this;
}

WordVector& WordVector::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [code, coef] : terms_) coef *= c;
    return *this;
}

std::string WordVector::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [code, c] : terms_) {
        const bool negative = c < 0;
        if (s.empty())
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        const Rational magnitude = negative ? Rational(-c) : c;
        if (magnitude != 1) s += to_fraction_string(magnitude) + "*";
        s += Word::from_code(code).to_string();
    }
    return s;
}

std::string WordVector::dump() const {
    std::string s;
    for (const auto& [code, c] : terms_) s += to_fraction_string(c) + "\t" + Word::from_code(code).to_string() + "\n";
    return s;
}

WordVector operator+(WordVector a, const WordVector& b) { return a += b; }
WordVector operator-(WordVector a, const WordVector& b) { return a -= b; }
WordVector operator*(const Rational& c, WordVector v) { return v *= c; }

namespace {

// Builds a vector from raw codes already known to share length and evaluation.
class Accumulator {
public:
    explicit Accumulator(WordMode mode) : mode_(mode) {}

    void add(std::string code, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(std::move(code), c);
        if (!inserted) it->second += c;
    }

    WordVector finish() const {
        WordVector v(mode_);
        for (const auto& [code, c] : terms_)
            if (c != 0) v.add_term(Word::from_code(code), c);
        return v;
    }

private:
    WordMode mode_;
    std::map<std::string, Rational> terms_;
};

void require_length(const WordVector& v, int n, const char* what) {
    if (!v.is_zero() && v.length() != n) throw std::invalid_argument(std::string(what) + ": word length mismatch");
}

}  // namespace

WordVector act(const Permutation& sigma, const WordVector& v) {
    require_length(v, sigma.size(), "act");
    Accumulator out(v.mode());
    for (const auto& [code, c] : v.terms()) {
        std::string moved(code.size(), '\0');
        for (int i = 1; i <= sigma.size(); ++i) moved[static_cast<std::size_t>(sigma(i) - 1)] = code[static_cast<std::size_t>(i - 1)];
        out.add(std::move(moved), c);
    }
    return out.finish();
}

WordVector act(const SignedPermutation& sigma, const WordVector& v) {
    if (v.mode() != WordMode::signed_letters) throw std::invalid_argument("act: signed permutation on a plain word vector");
    require_length(v, sigma.size(), "act");
    Accumulator out(v.mode());
    for (const auto& [code, c] : v.terms()) {
        std::string moved(code.size(), '\0');
        for (int i = 1; i <= sigma.size(); ++i) {
            const int target = sigma(i);
            const char letter = code[static_cast<std::size_t>(i - 1)];
            moved[static_cast<std::size_t>(std::abs(target) - 1)] = target < 0 ? flip_code(letter) : letter;
        }
        out.add(std::move(moved), c);
    }
    return out.finish();
}

WordVector append(const WordVector& v, Letter letter) {
    if (letter.sign != Sign::none && v.mode() != WordMode::signed_letters)
        throw std::invalid_argument("append: signed letter on a plain word vector");
    const char code = encode_letter(letter);
    Accumulator out(v.mode());
    for (const auto& [word, c] : v.terms()) out.add(word + code, c);
    return out.finish();
}

WordVector substitute(const WordVector& v, Letter from, Letter to) {
    if (to.sign != Sign::none && v.mode() != WordMode::signed_letters)
        throw std::invalid_argument("substitute: signed letter on a plain word vector");
    const char source = encode_letter(from);
    const char target = encode_letter(to);
    Accumulator out(v.mode());
    for (const auto& [word, c] : v.terms())
        for (std::size_t k = 0; k < word.size(); ++k)
            if (word[k] == source) {
                std::string replaced = word;
                replaced[k] = target;
                out.add(std::move(replaced), c);
            }
    return out.finish();
}

WordVector adding(const WordVector& v, int a, Flavor flavor) {
    if (flavor != Flavor::signed_part) return append(v, {a, Sign::none});
    return append(v, {a, Sign::plus}) - append(v, {a, Sign::minus});
}

WordVector switching(const WordVector& v, int b, int a, Flavor flavor) {
    if (flavor != Flavor::signed_part) return substitute(v, {b, Sign::none}, {a, Sign::none});
    const WordVector keep = substitute(v, {b, Sign::plus}, {a, Sign::plus}) + substitute(v, {b, Sign::minus}, {a, Sign::minus});
    const WordVector swap = substitute(v, {b, Sign::plus}, {a, Sign::minus}) + substitute(v, {b, Sign::minus}, {a, Sign::plus});
    return keep - swap;
}

WordVector switching_signed_to_unsigned(const WordVector& v, int b, int a) {
    return substitute(v, {b, Sign::plus}, {a, Sign::none}) + substitute(v, {b, Sign::minus}, {a, Sign::none});
}

WordVector shuffling(const WordVector& v, int a) {
    const char code = encode_letter({a, Sign::none});
    Accumulator out(v.mode());
    for (const auto& [word, c] : v.terms())
        for (std::size_t k = 0; k <= word.size(); ++k) {
            std::string inserted = word;
            inserted.insert(inserted.begin() + static_cast<std::ptrdiff_t>(k), code);
            out.add(std::move(inserted), c);
        }
    return out.finish();
}

namespace {

bool has_evaluation(const Word& w, const Partition& unsigned_shape, const Partition& signed_shape) {
    const auto e = evaluation(w);
    auto matches = [](const std::vector<int>& counts, const Partition& shape) {
        const int top = std::max(static_cast<int>(counts.size()) - 1, shape.length());
        for (int i = 1; i <= top; ++i) {
            const int count = i < static_cast<int>(counts.size()) ? counts[static_cast<std::size_t>(i)] : 0;
            if (count != shape.row(i)) return false;
        }
        return true;
    };
    return matches(e.unsigned_counts, unsigned_shape) && matches(e.signed_counts, signed_shape);
}

void require_addable(const Partition& shape, int row) {
    if (row < 1 || row > shape.length() + 1 || (row > 1 && shape.row(row - 1) <= shape.row(row)))
        throw std::invalid_argument("cannot add a box to row " + std::to_string(row) + " of " + shape.to_string());
}

// X(b) = Phi_b v + sum_{b' < b} c(b') Theta_{b',b} X(b'), with
// c(b') = 1/(k((lambda_i - i) - (lambda_b' - b'))); the lift is X(row).
WordVector lift(const WordVector& v, const Partition& shape, int row, int k, Flavor flavor) {
    const int target = shape.row(row) - row;
    std::vector<WordVector> x;
    x.reserve(static_cast<std::size_t>(row));
    for (int b = 1; b <= row; ++b) {
        WordVector xb = adding(v, b, flavor);
        for (int earlier = 1; earlier < b; ++earlier) {
            const Rational c = Rational(1) / (k * (target - (shape.row(earlier) - earlier)));
            xb += c * switching(x[static_cast<std::size_t>(earlier - 1)], earlier, b, flavor);
        }
        x.push_back(std::move(xb));
    }
    return x.back();
}

}  // namespace

WordVector kappa(const WordVector& v, const Partition& lambda, int row) {
    require_addable(lambda, row);
    if (!v.is_zero() && !has_evaluation(Word::from_code(v.terms().begin()->first), lambda, Partition{}))
        throw std::invalid_argument("kappa: vector does not have evaluation " + lambda.to_string());
    return lift(v, lambda, row, 1, Flavor::plain);
}

WordVector kappa(const WordVector& v, const BiPartition& lambda, int row, int component) {
    if (component != 1 && component != 2) throw std::invalid_argument("kappa: component must be 1 or 2");
    if (v.mode() != WordMode::signed_letters) throw std::invalid_argument("kappa: B_n lifting needs a signed word vector");
    require_addable(lambda.component(component), row);
    if (!v.is_zero() && !has_evaluation(Word::from_code(v.terms().begin()->first), lambda.first(), lambda.second()))
        throw std::invalid_argument("kappa: vector does not have evaluation " + lambda.to_string());
    return lift(v, lambda.component(component), row, component, component == 1 ? Flavor::unsigned_part : Flavor::signed_part);
}

Rational algebra_scale(const ShuffleSpec& spec) {
    const Rational n = spec.n();
    switch (spec.kind()) {
        case ShuffleKind::OST:
        case ShuffleKind::OST_biased:
        case ShuffleKind::B_OST:
        case ShuffleKind::B_OST_biased: return spec.exact_weight_total();
        case ShuffleKind::RT:
        case ShuffleKind::RTR: return n * n;
        case ShuffleKind::TTR: return n;
        case ShuffleKind::B_RT: return 2 * n * n;
        case ShuffleKind::cyclic_simple:
        case ShuffleKind::cyclic_lazy: break;
    }
    throw std::invalid_argument("no word-module action for " + spec.to_string());
}

WordVector apply_shuffle_algebra(const WordVector& v, const ShuffleSpec& spec) {
    if (!spec.exact()) throw std::invalid_argument("apply_shuffle_algebra needs rational weights");
    const Rational scale = algebra_scale(spec);
    require_length(v, spec.n(), "apply_shuffle_algebra");
    WordVector out(v.mode());
    if (spec.group() == GroupKind::symmetric) {
        for (const auto& [g, mass] : symmetric_support(spec)) out += (scale * mass) * act(g, v);
    } else {
        for (const auto& [g, mass] : signed_support(spec)) out += (scale * mass) * act(g, v);
    }
    return out;
}

namespace {

Partition with_box(const Partition& shape, int row) {
    auto parts = shape.parts();
    if (row > shape.length())
        parts.push_back(1);
    else
        ++parts[static_cast<std::size_t>(row - 1)];
    return Partition(parts);
}

// Change in the scaled eigenvalue when a box is added to row `row` (current
// length `length`) of component `component` at step m.
Rational increment(const ShuffleSpec& spec, int m, int row, int length, int component) {
    const int content = length + 1 - row;
    switch (spec.kind()) {
        case ShuffleKind::OST:
        case ShuffleKind::OST_biased: return spec.exact_weight(m) * (content + 1) / m;
        case ShuffleKind::RT: return 1 + 2 * content;
        case ShuffleKind::B_RT: return component == 1 ? Rational(2 + 4 * content) : Rational(4 * content);
        case ShuffleKind::B_OST:
        case ShuffleKind::B_OST_biased: return spec.exact_weight(m) * (component == 1 ? content + 1 : content) / m;
        default: break;
    }
    throw std::invalid_argument("no lifting for " + spec.to_string());
}

void require_basis_spec(const ShuffleSpec& spec, int size, GroupKind group, int cap) {
    if (spec.n() != size) throw std::invalid_argument("shape size does not match the deck size");
    if (spec.group() != group) throw std::invalid_argument("shape type does not match " + spec.to_string());
    if (!spec.exact()) throw std::invalid_argument("lifting needs rational weights");
    if (size > cap) throw CapExceeded("lifting cap exceeded at n = " + std::to_string(size));
}

}  // namespace

std::vector<LiftedVector> build_eigenbasis(const Partition& lambda, const ShuffleSpec& spec, const LiftingCaps& caps) {
    require_basis_spec(spec, lambda.size(), GroupKind::symmetric, caps.symmetric);
    if (spec.kind() == ShuffleKind::RTR || spec.kind() == ShuffleKind::TTR)
        throw std::invalid_argument("no lifting for " + spec.to_string());
    const Rational scale = algebra_scale(spec);
    std::vector<LiftedVector> out;
    for (const auto& t : enumerate_syt(lambda)) {
        WordVector v = WordVector::empty_word();
        Partition shape;
        Rational scaled = 0;
        for (int m = 1; m <= lambda.size(); ++m) {
            const int row = t.box_of(m).row;
            v = kappa(v, shape, row);
            scaled += increment(spec, m, row, shape.row(row), 1);
            shape = with_box(shape, row);
        }
        out.push_back({t, std::move(v), scaled / scale});
    }
    return out;
}

std::vector<LiftedVector> build_eigenbasis(const BiPartition& lambda, const ShuffleSpec& spec, const LiftingCaps& caps) {
    require_basis_spec(spec, lambda.size(), GroupKind::hyperoctahedral, caps.hyperoctahedral);
    const Rational scale = algebra_scale(spec);
    std::vector<LiftedVector> out;
    for (const auto& t : enumerate_bi_syt(lambda)) {
        WordVector v = WordVector::empty_word(WordMode::signed_letters);
        Partition first, second;
        Rational scaled = 0;
        for (int m = 1; m <= lambda.size(); ++m) {
            const auto [component, box] = t.box_of(m);
            Partition& part = component == 1 ? first : second;
            v = kappa(v, BiPartition(first, second), box.row, component);
            scaled += increment(spec, m, box.row, part.row(box.row), component);
            part = with_box(part, box.row);
        }
        out.push_back({t, std::move(v), scaled / scale});
    }
    return out;
}

EigenCheck verify_eigenvector(const WordVector& v, const ShuffleSpec& spec, const Rational& claimed) {
    if (v.is_zero()) return {false, "zero vector"};
    const WordVector image = apply_shuffle_algebra(v, spec);
    const Rational scaled = algebra_scale(spec) * claimed;
    const WordVector residual = image - scaled * v;
    if (residual.is_zero()) return {true, ""};
    const auto& [code, c] = *residual.terms().begin();
    const Word w = Word::from_code(code);
    return {false, "word " + w.to_string() + ": image coefficient " + to_fraction_string(image.coefficient(w)) + ", expected " +
                       to_fraction_string(scaled * v.coefficient(w))};
}

std::size_t rank(const std::vector<WordVector>& vectors) {
    std::map<std::string, std::size_t> column;
    for (const auto& v : vectors)
        for (const auto& [code, c] : v.terms()) column.try_emplace(code, column.size());
    std::vector<std::vector<Rational>> rows;
    for (const auto& v : vectors) {
        std::vector<Rational> row(column.size());
        for (const auto& [code, c] : v.terms()) row[column[code]] = c;
        rows.push_back(std::move(row));
    }
    std::size_t r = 0;
    for (std::size_t col = 0; col < column.size() && r < rows.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            const Rational f = rows[i][col] / rows[r][col];
            for (std::size_t j = col; j < column.size(); ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

namespace {

struct ShapeResult {
    std::string shape;
    std::int64_t vectors = 0;
    std::int64_t dimension = 0;
    std::size_t rank = 0;
    std::vector<std::string> eigen_failures;
    std::vector<std::string> formula_failures;
    std::vector<std::string> zero_vectors;
    std::vector<Rational> eigenvalues;
};

Rational formula_eigenvalue(const ShuffleSpec& spec, const LiftedIndex& index) {
    if (const auto* t = std::get_if<StandardTableau>(&index)) {
        switch (spec.kind()) {
            case ShuffleKind::OST: return ost_eig(*t);
            case ShuffleKind::OST_biased: return biased_ost_eig(*t, *spec.weight());
            case ShuffleKind::RT: return rt_eig(t->shape());
            default: break;
        }
    } else {
        const auto& bt = std::get<BiTableau>(index);
        switch (spec.kind()) {
            case ShuffleKind::B_RT: return brt_eig(bt.shape());
            case ShuffleKind::B_OST:
            case ShuffleKind::B_OST_biased: return bost_eig(bt, spec.weight());
            default: break;
        }
    }
    throw std::invalid_argument("no tableau formula for " + spec.to_string());
}

std::string index_text(const LiftedIndex& index) {
    return std::visit([](const auto& t) { return t.to_string(); }, index);
}

template <class Shape>
ShapeResult check_shape(const Shape& shape, const ShuffleSpec& spec, const LiftingCaps& caps) {
    ShapeResult r;
    r.shape = shape.to_string();
    const auto basis = build_eigenbasis(shape, spec, caps);
    if constexpr (std::is_same_v<Shape, Partition>)
        r.dimension = static_cast<std::int64_t>(dimension(shape));
    else
        r.dimension = static_cast<std::int64_t>(bi_dimension(shape));
    r.vectors = static_cast<std::int64_t>(basis.size());
    std::vector<WordVector> vectors;
    for (const auto& lifted : basis) {
        const std::string name = index_text(lifted.tableau);
        if (lifted.vector.is_zero()) r.zero_vectors.push_back(name);
        if (auto check = verify_eigenvector(lifted.vector, spec, lifted.eigenvalue); !check)
            r.eigen_failures.push_back(name + ": " + check.witness);
        const Rational expected = formula_eigenvalue(spec, lifted.tableau);
        if (expected != lifted.eigenvalue)
            r.formula_failures.push_back(name + ": lifted " + to_fraction_string(lifted.eigenvalue) + ", formula " +
                                         to_fraction_string(expected));
        r.eigenvalues.push_back(lifted.eigenvalue);
        vectors.push_back(lifted.vector);
    }
    r.rank = rank(vectors);
    return r;
}

}  // namespace

std::vector<CheckReport> lifting_checks(const ShuffleSpec& spec, int threads, const LiftingCaps& caps) {
    const bool symmetric = spec.group() == GroupKind::symmetric;
    const auto partitions = symmetric ? partitions_of(spec.n()) : std::vector<Partition>{};
    const auto bipartitions = symmetric ? std::vector<BiPartition>{} : bipartitions_of(spec.n());
    const std::size_t shapes = symmetric ? partitions.size() : bipartitions.size();
    std::vector<ShapeResult> results(shapes);
    parallel_for(shapes, threads, [&](std::size_t i) {
        results[i] = symmetric ? check_shape(partitions[i], spec, caps) : check_shape(bipartitions[i], spec, caps);
    });

    const std::string suffix = " " + spec.to_string();
    CheckReport eigen{"lifted vectors are eigenvectors" + suffix, true, 0, ""};
    CheckReport formula{"lifted eigenvalues match the tableau formula" + suffix, true, 0, ""};
    CheckReport nonzero{"lifted vectors are nonzero" + suffix, true, 0, ""};
    CheckReport independent{"lifted vectors of a shape are independent" + suffix, true, 0, ""};
    CheckReport catalog_match{"lifted eigenvalue multiset equals the catalog" + suffix, true, 0, ""};
    auto fail = [](CheckReport& report, const std::string& witness) {
        if (report.passed) report.witness = witness;
        report.passed = false;
    };
    std::map<Rational, std::int64_t> lifted;
    for (const auto& r : results) {
        eigen.cases += r.vectors;
        formula.cases += r.vectors;
        nonzero.cases += r.vectors;
        independent.cases += 1;
        if (!r.eigen_failures.empty()) fail(eigen, r.eigen_failures.front());
        if (!r.formula_failures.empty()) fail(formula, r.formula_failures.front());
        if (!r.zero_vectors.empty()) fail(nonzero, r.zero_vectors.front());
        if (r.rank != static_cast<std::size_t>(r.vectors) || r.vectors != r.dimension)
            fail(independent, r.shape + ": " + std::to_string(r.vectors) + " vectors of rank " + std::to_string(r.rank) +
                                  ", dimension " + std::to_string(r.dimension));
        for (const auto& e : r.eigenvalues) lifted[e] += r.dimension;
    }
    std::map<Rational, std::int64_t> expected;
    for (const auto& entry : build_catalog(spec).entries()) expected[*entry.exact_value] += entry.multiplicity;
    catalog_match.cases = static_cast<std::int64_t>(expected.size());
    if (lifted != expected) {
        for (const auto& [value, mult] : expected) {
            const auto it = lifted.find(value);
            const std::int64_t got = it == lifted.end() ? 0 : it->second;
            if (got != mult) {
                fail(catalog_match, "eigenvalue " + to_fraction_string(value) + ": catalog multiplicity " + std::to_string(mult) +
                                        ", lifted " + std::to_string(got));
                break;
            }
        }
        if (catalog_match.passed) fail(catalog_match, "lifted basis has eigenvalues absent from the catalog");
    }
    return {eigen, formula, nonzero, independent, catalog_match};
}

WordVector random_word_vector(int n, WordMode mode, Rng& rng, int terms) {
    std::uniform_int_distribution<int> value(1, std::max(n, 1));
    std::uniform_int_distribution<int> sign(0, mode == WordMode::signed_letters ? 2 : 0);
    std::vector<Letter> base;
    for (int i = 0; i < n; ++i) base.push_back({value(rng), static_cast<Sign>(sign(rng))});
    std::uniform_int_distribution<int> numerator(-3, 3);
    std::uniform_int_distribution<int> denominator(1, 3);
    WordVector v(mode);
    for (int t = 0; t < terms; ++t) {
        std::shuffle(base.begin(), base.end(), rng);
        int num = 0;
        while (num == 0) num = numerator(rng);
        v.add_term(Word(base), Rational(num, denominator(rng)));
    }
    return v;
}

namespace {

Permutation random_permutation(int n, Rng& rng) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::shuffle(images.begin(), images.end(), rng);
    return Permutation(images);
}

SignedPermutation random_signed_permutation(int n, Rng& rng) {
    auto images = random_permutation(n, rng).images();
    std::bernoulli_distribution flip(0.5);
    for (auto& x : images)
        if (flip(rng)) x = -x;
    return SignedPermutation(images);
}

class IdentityCheck {
public:
    explicit IdentityCheck(std::string name) { report_.name = std::move(name); }

    void expect_equal(const WordVector& lhs, const WordVector& rhs, const std::function<std::string()>& context) {
        ++report_.cases;
        if (lhs == rhs || !report_.passed) return;
        report_.passed = false;
        report_.witness = context() + ": lhs " + lhs.to_string() + ", rhs " + rhs.to_string();
    }

    CheckReport report() const { return report_; }

private:
    CheckReport report_;
};

// Sum over letters b in 1..top of f(b).
WordVector sum_over_letters(int top, WordMode mode, const std::function<WordVector(int)>& f) {
    WordVector out(mode);
    for (int b = 1; b <= top; ++b) out += f(b);
    return out;
}

}  // namespace

std::vector<CheckReport> operator_identity_checks(int n, int trials, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("operator identities need n >= 1");
    Rng rng = make_rng(seed, static_cast<std::uint64_t>(n));
    const int m = n + 1;
    const std::string at = " at n=" + std::to_string(n);
    IdentityCheck ost("master equation, one-sided" + at);
    IdentityCheck biased("master equation, weighted one-sided" + at);
    IdentityCheck rt("master equation, random transposition" + at);
    IdentityCheck commute("adding/switching commutation" + at);
    IdentityCheck equivariant("switching equivariance" + at);
    IdentityCheck brt("master equations, B_n random transposition" + at);
    IdentityCheck bost("master equations, B_n weighted one-sided" + at);
    IdentityCheck bcommute("B_n adding/switching commutation" + at);
    IdentityCheck bequivariant("B_n switching equivariance" + at);

    const std::vector<int> alphas = {-1, 0, 1, 2};
    std::uniform_int_distribution<int> letter(1, m);
    std::uniform_int_distribution<std::size_t> pick_alpha(0, alphas.size() - 1);
    const auto plain = WordMode::plain;
    const auto signed_mode = WordMode::signed_letters;

    for (int trial = 0; trial < trials; ++trial) {
        const WordVector v = random_word_vector(n, plain, rng);
        const WordVector s = random_word_vector(n, signed_mode, rng);
        const int a = letter(rng);
        const int b = letter(rng);
        const Weight weight = Weight::power(alphas[pick_alpha(rng)]);
        auto context = [&] { return "v = " + v.to_string() + ", a = " + std::to_string(a) + ", b = " + std::to_string(b); };
        auto signed_context = [&] { return "v = " + s.to_string() + ", a = " + std::to_string(a) + ", b = " + std::to_string(b); };

        auto commutator = [&](const WordVector& x, ShuffleKind kind, const std::optional<Weight>& w, Flavor flavor) {
            const ShuffleSpec big(kind, m, w), small(kind, n, w);
            return apply_shuffle_algebra(adding(x, a, flavor), big) - adding(apply_shuffle_algebra(x, small), a, flavor);
        };
        const WordVector phi_theta =
            sum_over_letters(m, plain, [&](int c) { return adding(switching(v, c, a), c); });

        ost.expect_equal(commutator(v, ShuffleKind::OST, std::nullopt, Flavor::plain),
                         Rational(1, m) * (adding(v, a) + phi_theta), context);
        biased.expect_equal(commutator(v, ShuffleKind::OST_biased, weight, Flavor::plain),
                            (weight.exact_at(m) / m) * (adding(v, a) + phi_theta), context);
        rt.expect_equal(commutator(v, ShuffleKind::RT, std::nullopt, Flavor::plain), adding(v, a) + 2 * phi_theta, context);

        commute.expect_equal(adding(switching(v, b, a), b), switching(adding(v, b), b, a) - adding(v, a), context);
        const Permutation sigma = random_permutation(n, rng);
        equivariant.expect_equal(act(sigma, switching(v, b, a)), switching(act(sigma, v), b, a), context);

        const WordVector unsigned_terms =
            sum_over_letters(m, signed_mode, [&](int c) { return adding(switching(s, c, a, Flavor::unsigned_part), c, Flavor::unsigned_part); });
        const WordVector folded_terms = sum_over_letters(m, signed_mode, [&](int c) {
            const WordVector folded = switching_signed_to_unsigned(s, c, a);
            return append(folded, {c, Sign::plus}) + append(folded, {c, Sign::minus});
        });
        const WordVector signed_terms =
            sum_over_letters(m, signed_mode, [&](int c) { return adding(switching(s, c, a, Flavor::signed_part), c, Flavor::signed_part); });
        const WordVector phi1 = adding(s, a, Flavor::unsigned_part);

        brt.expect_equal(commutator(s, ShuffleKind::B_RT, std::nullopt, Flavor::unsigned_part),
                         2 * phi1 + 4 * unsigned_terms + 2 * folded_terms, signed_context);
        brt.expect_equal(commutator(s, ShuffleKind::B_RT, std::nullopt, Flavor::signed_part), 2 * signed_terms, signed_context);

        const Rational w = weight.exact_at(m) / m;
        bost.expect_equal(commutator(s, ShuffleKind::B_OST_biased, weight, Flavor::unsigned_part),
                          w * (phi1 + unsigned_terms + Rational(1, 2) * folded_terms), signed_context);
        bost.expect_equal(commutator(s, ShuffleKind::B_OST_biased, weight, Flavor::signed_part), (w / 2) * signed_terms,
                          signed_context);

        bcommute.expect_equal(adding(switching(s, b, a, Flavor::unsigned_part), b, Flavor::unsigned_part),
                              switching(adding(s, b, Flavor::unsigned_part), b, a, Flavor::unsigned_part) - phi1,
                              signed_context);
        bcommute.expect_equal(adding(switching(s, b, a, Flavor::signed_part), b, Flavor::signed_part),
                              switching(adding(s, b, Flavor::signed_part), b, a, Flavor::signed_part) -
                                  2 * adding(s, a, Flavor::signed_part),
                              signed_context);

        const SignedPermutation tau = random_signed_permutation(n, rng);
        for (Flavor flavor : {Flavor::unsigned_part, Flavor::signed_part})
            bequivariant.expect_equal(act(tau, switching(s, b, a, flavor)), switching(act(tau, s), b, a, flavor), signed_context);
        bequivariant.expect_equal(act(tau, switching_signed_to_unsigned(s, b, a)), switching_signed_to_unsigned(act(tau, s), b, a),
                                  signed_context);
    }
    return {ost.report(), biased.report(), rt.report(), commute.report(), equivariant.report(),
            brt.report(), bost.report(), bcommute.report(), bequivariant.report()};
}

std::vector<CheckReport> reference_lift_checks() {
    auto vector_of = [](WordMode mode, std::initializer_list<std::pair<const char*, Rational>> terms) {
        WordVector v(mode);
        for (const auto& [w, c] : terms) v.add_term(Word::parse(w), c);
        return v;
    };
    const auto plain = WordMode::plain;
    const auto signed_mode = WordMode::signed_letters;
    const Rational h(1, 2);
    auto check = [](std::string name, const WordVector& got, const WordVector& want, const ShuffleSpec& spec,
                    const Rational& eigenvalue) {
        CheckReport r;
        r.name = std::move(name);
        r.cases = 2;
        if (got != want) {
            r.passed = false;
            r.witness = "got " + got.to_string() + ", expected " + want.to_string();
        } else if (auto e = verify_eigenvector(got, spec, eigenvalue); !e) {
            r.passed = false;
            r.witness = e.witness;
        }
        return r;
    };
    const WordVector one = vector_of(plain, {{"1", 1}});
    const WordVector antisym = vector_of(plain, {{"12", 1}, {"21", -1}});
    const WordVector w = vector_of(signed_mode, {{"11+", 1}, {"11-", -1}});
    const BiPartition shape(Partition{1}, Partition{1});
    return {
        check("kappa_1 of 1 is 11", kappa(one, Partition{1}, 1), vector_of(plain, {{"11", 1}}), ShuffleSpec(ShuffleKind::OST, 2), 1),
        check("kappa_2 of 1 is (12 - 21)/2", kappa(one, Partition{1}, 2), vector_of(plain, {{"12", h}, {"21", -h}}),
              ShuffleSpec(ShuffleKind::OST, 2), h),
        check("sh_1 of 12 - 21 is 2(112 - 211)", shuffling(antisym, 1), vector_of(plain, {{"112", 2}, {"211", -2}}),
              ShuffleSpec(ShuffleKind::RTR, 3), Rational(4, 9)),
        check("B_n kappa_2 into the first component", kappa(w, shape, 2, 1),
              vector_of(signed_mode, {{"11+2", h}, {"21+1", -h}, {"11-2", -h}, {"21-1", h}}), ShuffleSpec(ShuffleKind::B_RT, 3),
              brt_eig(BiPartition(Partition{1, 1}, Partition{1}))),
        check("B_n kappa_2 into the second component", kappa(w, shape, 2, 2),
              vector_of(signed_mode, {{"11+2+", h}, {"12+1+", -h}, {"11-2-", h}, {"12-1-", -h}, {"11+2-", -h}, {"12-1+", h},
                                      {"11-2+", -h}, {"12+1-", h}}),
              ShuffleSpec(ShuffleKind::B_RT, 3), brt_eig(BiPartition(Partition{1}, Partition{1, 1}))),
    };
}

}  // namespace shuffle_lab
