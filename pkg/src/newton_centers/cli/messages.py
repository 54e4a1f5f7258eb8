"""
Strings and string formatting templates used by the command line.
"""

#: Message displayed for an empty system description.
EMPTY_INPUT = "The system description is empty!"

#: Message displayed for a character the tokenizer does not know.
UNEXPECTED_CHARACTER = "Unexpected character {character!r} at offset {position}."

#: Message displayed for a token that can not start or continue an expression.
UNEXPECTED_TOKEN = "Unexpected {text!r} at offset {position}."

#: Message displayed when a closing parenthesis is missing.
MISSING_PARENTHESIS = "Expected ')' at offset {position}."

#: Message displayed for a variable other than x and y.
UNKNOWN_VARIABLE = "Unknown variable {name!r} at offset {position}; only x and y are allowed."

#: Message displayed for a division by a non-constant or zero polynomial.
BAD_DIVISOR = "Division at offset {position} must be by a nonzero rational constant."

#: Message displayed for an exponent which is not a nonnegative integer.
BAD_EXPONENT = "Exponent at offset {position} must be a nonnegative integer constant."

#: Message displayed for a malformed numeric literal.
BAD_LITERAL = "Malformed number {literal!r} at offset {position}."

#: Message displayed for a malformed coefficient list.
BAD_COEFFICIENTS = "Coefficient form must be a JSON list of coefficient lists (got {text!r})."

#: Message displayed for a malformed --amplitudes value.
BAD_AMPLITUDES = "Amplitudes must be a comma separated list of positive numbers (got {text!r})."

#: Message displayed for a malformed Kukles coefficient assignment.
BAD_ASSIGNMENT = "Expected NAME=VALUE (got {text!r})."

#: Message displayed for an unknown Kukles coefficient name.
BAD_KUKLES_NAME = "Unknown Kukles parameter {name!r}; use n, delta or a<i> for a_(n-i,i)."

#: Message displayed when a certificate does not match the committed schema.
INVALID_CERTIFICATE = "Certificate does not match its schema: {error}"

#: Progress line printed by verbose runs.
PROGRESS = "[newton-centers] {step}"

#: Message displayed for a malformed --initial value.
BAD_INITIAL = "Initial conditions must be given as X,Y (got {text!r})."

#: Message displayed when a Kukles sweep disagrees with the closed form.
KUKLES_MISMATCH = "{count} Kukles instances disagree with the closed form."

#: Message displayed when a Liénard sweep disagrees with the predicate.
LIENARD_MISMATCH = "{count} Liénard instances disagree with the closed-form predicate."

#: Message displayed when randomized blow-ups break their identities.
BLOWUP_FAILURES = "{count} blow-up identities failed."

#: Message displayed when the period function is requested for a non-center.
NOT_GLOBAL_CENTER = "{system} is not a global center ({reason}); pass --force to sample its period function anyway."

#: Message displayed when an input error aborts a command.
INPUT_ERROR = "error: {error}"

#: Message displayed when an internal invariant is violated.
INVARIANT_ERROR = "invariant violation: {error}"

# flake8: noqa: E501
