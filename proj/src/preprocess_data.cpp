#include "mgtd/preprocess.hpp"

namespace mgtd {

// Standard English stopword list (NLTK-derived, 179 entries), normalized for
// this pipeline: apostrophes removed, duplicates dropped. The stopword filter
// runs after punctuation stripping, so entries must be punctuation-free.
const std::vector<std::string>& default_stopwords() {
    static const std::vector<std::string> words = {
        "i", "me", "my", "myself", "we", "our", "ours", "ourselves",
        "you", "youre", "youve", "youll", "youd", "your", "yours",
        "yourself", "yourselves", "he", "him", "his", "himself", "she",
        "shes", "her", "hers", "herself", "it", "its", "itself", "they",
        "them", "their", "theirs", "themselves", "what", "which", "who",
        "whom", "this", "that", "thatll", "these", "those", "am", "is",
        "are", "was", "were", "be", "been", "being", "have", "has", "had",
        "having", "do", "does", "did", "doing", "a", "an", "the", "and",
        "but", "if", "or", "because", "as", "until", "while", "of", "at",
        "by", "for", "with", "about", "against", "between", "into",
        "through", "during", "before", "after", "above", "below", "to",
        "from", "up", "down", "in", "out", "on", "off", "over", "under",
        "again", "further", "then", "once", "here", "there", "when",
        "where", "why", "how", "all", "any", "both", "each", "few",
        "more", "most", "other", "some", "such", "no", "nor", "not",
        "only", "own", "same", "so", "than", "too", "very", "s", "t",
        "can", "will", "just", "don", "dont", "should", "shouldve",
        "now", "d", "ll", "m", "o", "re", "ve", "y", "ain", "aren",
        "arent", "couldn", "couldnt", "didn", "didnt", "doesn", "doesnt",
        "hadn", "hadnt", "hasn", "hasnt", "haven", "havent", "isn",
        "isnt", "ma", "mightn", "mightnt", "mustn", "mustnt", "needn",
        "neednt", "shan", "shant", "shouldn", "shouldnt", "wasn",
        "wasnt", "weren", "werent", "won", "wont", "wouldn", "wouldnt",
    };
    return words;
}

// Irregular forms the suffix rules cannot reach.
const std::vector<std::pair<std::string, std::string>>& default_lemma_exceptions() {
    static const std::vector<std::pair<std::string, std::string>> pairs = {
        {"children", "child"}, {"men", "man"},      {"women", "woman"},
        {"feet", "foot"},      {"teeth", "tooth"},  {"mice", "mouse"},
        {"geese", "goose"},    {"went", "go"},      {"gone", "go"},
        {"ran", "run"},        {"came", "come"},    {"took", "take"},
        {"taken", "take"},     {"gave", "give"},    {"given", "give"},
        {"made", "make"},      {"said", "say"},     {"saw", "see"},
        {"seen", "see"},       {"knew", "know"},    {"known", "know"},
        {"thought", "think"},  {"found", "find"},   {"got", "get"},
        {"wrote", "write"},    {"written", "write"},{"ate", "eat"},
        {"eaten", "eat"},      {"spoke", "speak"},  {"spoken", "speak"},
        {"began", "begin"},    {"begun", "begin"},  {"held", "hold"},
        {"kept", "keep"},      {"felt", "feel"},    {"told", "tell"},
        {"became", "become"},  {"brought", "bring"},{"bought", "buy"},
        {"sent", "send"},      {"built", "build"},  {"meant", "mean"},
        {"lost", "lose"},      {"paid", "pay"},     {"met", "meet"},
    };
    return pairs;
}

// Common emoji and symbols, mapped to lowercase English short names. Unmapped
// symbols are stripped with punctuation.
const std::vector<std::pair<char32_t, std::string>>& default_emoji_names() {
    static const std::vector<std::pair<char32_t, std::string>> pairs = {
        {0x1F600, "grinning face"},
        {0x1F601, "beaming face"},
        {0x1F602, "face with tears of joy"},
        {0x1F603, "grinning face with big eyes"},
        {0x1F604, "grinning face with smiling eyes"},
        {0x1F605, "grinning face with sweat"},
        {0x1F606, "grinning squinting face"},
        {0x1F607, "smiling face with halo"},
        {0x1F608, "smiling face with horns"},
        {0x1F609, "winking face"},
        {0x1F60A, "smiling face with smiling eyes"},
        {0x1F60B, "face savoring food"},
        {0x1F60D, "smiling face with heart eyes"},
        {0x1F60E, "smiling face with sunglasses"},
        {0x1F610, "neutral face"},
        {0x1F612, "unamused face"},
        {0x1F614, "pensive face"},
        {0x1F615, "confused face"},
        {0x1F618, "face blowing a kiss"},
        {0x1F61A, "kissing face"},
        {0x1F61C, "winking face with tongue"},
        {0x1F61E, "disappointed face"},
        {0x1F620, "angry face"},
        {0x1F621, "pouting face"},
        {0x1F622, "crying face"},
        {0x1F624, "face with steam from nose"},
        {0x1F626, "frowning face"},
        {0x1F628, "fearful face"},
        {0x1F629, "weary face"},
        {0x1F62A, "sleepy face"},
        {0x1F62B, "tired face"},
        {0x1F62C, "grimacing face"},
        {0x1F62D, "loudly crying face"},
        {0x1F62E, "face with open mouth"},
        {0x1F631, "face screaming in fear"},
        {0x1F633, "flushed face"},
        {0x1F634, "sleeping face"},
        {0x1F637, "face with medical mask"},
        {0x1F641, "frowning face"},
        {0x1F642, "smiling face"},
        {0x1F643, "upside down face"},
        {0x1F644, "face with rolling eyes"},
        {0x1F648, "see no evil monkey"},
        {0x1F649, "hear no evil monkey"},
        {0x1F64A, "speak no evil monkey"},
        {0x1F64F, "folded hands"},
        {0x1F440, "eyes"},
        {0x1F44B, "waving hand"},
        {0x1F44C, "ok hand"},
        {0x1F44D, "thumbs up"},
        {0x1F44E, "thumbs down"},
        {0x1F44F, "clapping hands"},
        {0x1F4AA, "flexed biceps"},
        {0x1F91D, "handshake"},
        {0x270C, "victory hand"},
        {0x270B, "raised hand"},
        {0x2764, "red heart"},
        {0x1F494, "broken heart"},
        {0x1F496, "sparkling heart"},
        {0x1F499, "blue heart"},
        {0x1F49A, "green heart"},
        {0x1F49B, "yellow heart"},
        {0x1F525, "fire"},
        {0x2B50, "star"},
        {0x1F31F, "glowing star"},
        {0x2728, "sparkles"},
        {0x1F389, "party popper"},
        {0x1F38A, "confetti ball"},
        {0x1F4AF, "hundred points"},
        {0x1F4A9, "pile of poo"},
        {0x1F680, "rocket"},
        {0x1F4B0, "money bag"},
        {0x1F4A1, "light bulb"},
        {0x1F4AC, "speech balloon"},
        {0x2600, "sun"},
        {0x1F31E, "sun with face"},
        {0x1F319, "crescent moon"},
        {0x26A1, "high voltage"},
        {0x2614, "umbrella with rain drops"},
        {0x2744, "snowflake"},
        {0x1F308, "rainbow"},
        {0x1F340, "four leaf clover"},
        {0x1F355, "pizza"},
        {0x1F354, "hamburger"},
        {0x2615, "hot beverage"},
        {0x1F37A, "beer mug"},
        {0x1F382, "birthday cake"},
        {0x1F381, "wrapped gift"},
        {0x26BD, "soccer ball"},
        {0x1F3C6, "trophy"},
        {0x1F436, "dog face"},
        {0x1F431, "cat face"},
        {0x1F984, "unicorn"},
        {0x1F40D, "snake"},
        {0x1F697, "automobile"},
        {0x2708, "airplane"},
        {0x1F4F1, "mobile phone"},
        {0x1F4BB, "laptop"},
        {0x231A, "watch"},
        {0x1F6A8, "police car light"},
        {0x26A0, "warning"},
        {0x2705, "check mark button"},
        {0x274C, "cross mark"},
        {0x2753, "question mark"},
        {0x2757, "exclamation mark"},
    };
    return pairs;
}

} // namespace mgtd
