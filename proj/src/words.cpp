#include "gjcluster/words.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace gjc {

namespace {

bool valid_letter_token(std::string_view tok) {
    if (tok.empty() || tok == "1") return false;
    for (char c : tok) {
        if (c == '.' || c == ',' || c == '^' || std::isspace(static_cast<unsigned char>(c)))
            return false;
    }
    return true;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
    if (letters_.empty())
        throw std::invalid_argument("alphabet must contain at least one letter");
    std::set<std::string_view> seen;
    for (const auto& tok : letters_) {
        if (!valid_letter_token(tok))
            throw std::invalid_argument("invalid letter token \"" + tok +
                                        "\" (tokens must be nonempty, not \"1\", and free of"
                                        " '.', ',', '^' and whitespace)");
        if (!seen.insert(tok).second)
            throw std::invalid_argument("duplicate letter token \"" + tok + "\"");
        if (tok.size() != 1) single_char_ = false;
    }
}

std::shared_ptr<const Alphabet> Alphabet::make(std::vector<std::string> letters) {
    return std::make_shared<const Alphabet>(std::move(letters));
}

std::optional<Letter> Alphabet::index_of(std::string_view token) const {
    for (std::size_t i = 0; i < letters_.size(); ++i)
        if (letters_[i] == token) return static_cast<Letter>(i);
    return std::nullopt;
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

void require_same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b, const char* context) {
    if (!same_alphabet(a, b))
        throw AlphabetMismatchError(std::string("alphabet mismatch in ") + context);
}

Word::Word(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
    if (!alphabet_) throw std::invalid_argument("word requires an alphabet");
}

Word::Word(AlphabetPtr alphabet, std::vector<Letter> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
    if (!alphabet_) throw std::invalid_argument("word requires an alphabet");
    for (Letter a : letters_)
        if (a >= alphabet_->size())
            throw std::invalid_argument("letter index out of range for alphabet");
}

Word Word::parse(const AlphabetPtr& alphabet, std::string_view text) {
    if (!alphabet) throw std::invalid_argument("word requires an alphabet");
    if (text.empty() || text == "1") return Word(alphabet);
    std::vector<Letter> letters;
    if (text.find('.') != std::string_view::npos) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t dot = text.find('.', pos);
            std::string_view tok = text.substr(pos, dot == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : dot - pos);
            auto idx = alphabet->index_of(tok);
            if (!idx)
                throw std::invalid_argument("unknown letter \"" + std::string(tok) + "\"");
            letters.push_back(*idx);
            if (dot == std::string_view::npos) break;
            pos = dot + 1;
        }
    } else if (alphabet->single_char()) {
        for (char c : text) {
            auto idx = alphabet->index_of(std::string_view(&c, 1));
            if (!idx)
                throw std::invalid_argument(std::string("unknown letter \"") + c + "\"");
            letters.push_back(*idx);
        }
    } else {
        auto idx = alphabet->index_of(text);
        if (!idx)
            throw std::invalid_argument("cannot parse word \"" + std::string(text) +
                                        "\" (multi-character tokens are dot-separated)");
        letters.push_back(*idx);
    }
    return Word(alphabet, std::move(letters));
}

Word Word::subword(std::size_t pos0, std::size_t len) const {
    if (pos0 + len > letters_.size())
        throw std::out_of_range("subword range exceeds word length");
    return Word(alphabet_,
                std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos0),
                                    letters_.begin() + static_cast<std::ptrdiff_t>(pos0 + len)));
}

Word Word::append(Letter a) const {
    auto letters = letters_;
    letters.push_back(a);
    return Word(alphabet_, std::move(letters));
}

std::string Word::to_string() const {
    if (letters_.empty()) return "1";
    std::ostringstream out;
    const char* sep = alphabet_->single_char() ? "" : ".";
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out << sep;
        out << alphabet_->letter(letters_[i]);
    }
    return out.str();
}

bool Word::operator==(const Word& other) const {
    return same_alphabet(alphabet_, other.alphabet_) && letters_ == other.letters_;
}

bool Word::operator<(const Word& other) const {
    if (letters_.size() != other.letters_.size())
        return letters_.size() < other.letters_.size();
    return letters_ < other.letters_;
}

Word concat(const Word& u, const Word& v) {
    require_same_alphabet(u.alphabet(), v.alphabet(), "concat");
    std::vector<Letter> letters = u.letters();
    letters.insert(letters.end(), v.letters().begin(), v.letters().end());
    return Word(u.alphabet(), std::move(letters));
}

bool is_subword(const Word& needle, const Word& hay) {
    require_same_alphabet(needle.alphabet(), hay.alphabet(), "is_subword");
    if (needle.size() > hay.size()) return false;
    const auto& n = needle.letters();
    const auto& h = hay.letters();
    if (n.empty()) return true;
    return std::search(h.begin(), h.end(), n.begin(), n.end()) != h.end();
}

Span span_from_letter_range(std::int64_t lo, std::int64_t hi) {
    if (lo < 1 || hi < lo)
        throw std::invalid_argument("invalid letter range for span");
    return Span{static_cast<std::uint32_t>(lo), static_cast<std::uint32_t>(hi - lo + 1)};
}

Span span_from_cut_range(std::int64_t lo, std::int64_t hi) {
    if (lo < 1 || hi <= lo)
        throw std::invalid_argument("invalid cut range for span");
    return Span{static_cast<std::uint32_t>(lo), static_cast<std::uint32_t>(hi - lo + 1)};
}

ForbiddenSet::ForbiddenSet(AlphabetPtr alphabet, std::vector<Word> words)
    : alphabet_(std::move(alphabet)) {
    if (!alphabet_) throw std::invalid_argument("forbidden set requires an alphabet");
    std::set<Word> unique;
    for (auto& w : words) {
        require_same_alphabet(alphabet_, w.alphabet(), "forbidden set");
        if (w.size() < 2)
            throw std::invalid_argument("forbidden word \"" + w.to_string() +
                                        "\" is too short (length >= 2 required)");
        unique.insert(std::move(w));
    }
    words_.assign(unique.begin(), unique.end());
    for (const auto& w : words_) max_pattern_len_ = std::max(max_pattern_len_, w.size());
    for (std::size_t i = 0; i < words_.size() && reduced_; ++i)
        for (std::size_t j = 0; j < words_.size(); ++j)
            if (i != j && is_subword(words_[j], words_[i])) {
                reduced_ = false;
                break;
            }
}

ForbiddenSet ForbiddenSet::parse(const AlphabetPtr& alphabet,
                                 const std::vector<std::string>& texts) {
    std::vector<Word> words;
    words.reserve(texts.size());
    for (const auto& t : texts) words.push_back(Word::parse(alphabet, t));
    return ForbiddenSet(alphabet, std::move(words));
}

bool ForbiddenSet::contains(const Word& w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
}

ForbiddenSet ForbiddenSet::reduce() const {
    std::vector<Word> kept;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        bool has_smaller = false;
        for (std::size_t j = 0; j < words_.size() && !has_smaller; ++j)
            if (i != j && is_subword(words_[j], words_[i])) has_smaller = true;
        if (!has_smaller) kept.push_back(words_[i]);
    }
    return ForbiddenSet(alphabet_, std::move(kept));
}

std::vector<Occurrence> occurrences(const Word& w, const ForbiddenSet& f) {
    require_same_alphabet(w.alphabet(), f.alphabet(), "occurrences");
    std::vector<Occurrence> found;
    const auto& letters = w.letters();
    for (std::uint32_t pi = 0; pi < f.size(); ++pi) {
        const auto& pat = f.word(pi).letters();
        if (pat.size() > letters.size()) continue;
        for (std::size_t s = 0; s + pat.size() <= letters.size(); ++s) {
            if (std::equal(pat.begin(), pat.end(), letters.begin() + static_cast<std::ptrdiff_t>(s)))
                found.push_back(Occurrence{
                    Span{static_cast<std::uint32_t>(s + 1), static_cast<std::uint32_t>(pat.size())},
                    pi});
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

std::size_t occurrence_count(const Word& w, const ForbiddenSet& f) {
    return occurrences(w, f).size();
}

bool avoids(const Word& w, const ForbiddenSet& f) {
    require_same_alphabet(w.alphabet(), f.alphabet(), "avoids");
    const auto& letters = w.letters();
    for (const auto& pat_word : f.words()) {
        const auto& pat = pat_word.letters();
        if (pat.size() > letters.size()) continue;
        if (std::search(letters.begin(), letters.end(), pat.begin(), pat.end()) != letters.end())
            return false;
    }
    return true;
}

}  // namespace gjc
