#pragma once

#include <string>
#include <vector>

namespace fracsde {

/// A binary word indexing a mixed iterated integral. Letter '0' is a time
/// slot (dt), letter '1' a noise slot (dB). Position 0 is the INNERMOST
/// integration variable; the text encoding concatenates letters
/// innermost-first.
class Word {
public:
    explicit Word(std::string letters);

    static Word parse(const std::string& text) { return Word(text); }

    const std::string& text() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool is_db(std::size_t i) const { return letters_[i] == '1'; }

    /// Number of dB slots.
    int weight() const;

    /// 1-based positions of the dt slots, ascending.
    std::vector<int> dt_positions() const;

    bool operator==(const Word&) const = default;

private:
    std::string letters_;
};

/// All words of length 2m+n with exactly 2m dB slots, lexicographic.
std::vector<Word> words_for_exponent(int m, int n);

} // namespace fracsde
