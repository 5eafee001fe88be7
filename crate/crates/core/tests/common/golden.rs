//! Pinned parser and evaluator outputs (base 10).

/// Expression and its pinned `describe` output in base 10.
pub const GOLDEN: &[(&str, &str)] = &[
    ("0", "0 (Infinitesimal, st=0)"),
    ("7", "7 (FiniteAppreciable, st=7)"),
    ("eps", "eps (Infinitesimal, st=0)"),
    ("-eps", "-eps (Infinitesimal, st=0)"),
    ("H", "H (Infinite)"),
    ("-H", "-H (Infinite)"),
    ("2+3*eps", "2 + 3*eps (FiniteAppreciable, st=2)"),
    ("(2+3)*eps", "5*eps (Infinitesimal, st=0)"),
    ("2*3+eps", "6 + eps (FiniteAppreciable, st=6)"),
    ("1-2-3", "-4 (FiniteAppreciable, st=-4)"),
    ("1-(2-3)", "2 (FiniteAppreciable, st=2)"),
    ("2*3*4", "24 (FiniteAppreciable, st=24)"),
    ("-2^2", "-4 (FiniteAppreciable, st=-4)"),
    ("(-2)^2", "4 (FiniteAppreciable, st=4)"),
    ("2^3*2", "16 (FiniteAppreciable, st=16)"),
    ("2*3^2", "18 (FiniteAppreciable, st=18)"),
    ("(2+eps)*(3-eps)", "6 + eps - eps^2 (FiniteAppreciable, st=6)"),
    ("st((2+eps)*(3-eps))", "6"),
    ("st(5 + 3*eps)", "5"),
    ("st(3*eps + 5)", "5"),
    ("42*H*eps", "42 (FiniteAppreciable, st=42)"),
    ("st(42*H*eps)", "42"),
    ("H*eps", "1 (FiniteAppreciable, st=1)"),
    ("H^2 - H*H", "0 (Infinitesimal, st=0)"),
    ("H^2", "H^2 (Infinite)"),
    ("eps^2", "eps^2 (Infinitesimal, st=0)"),
    ("eps^0", "1 (FiniteAppreciable, st=1)"),
    ("H^-1", "eps (Infinitesimal, st=0)"),
    ("eps^-2", "H^2 (Infinite)"),
    ("(3*eps)^-1", "1/3*H (Infinite)"),
    ("1/2", "1/2 (FiniteAppreciable, st=1/2)"),
    ("2/4", "1/2 (FiniteAppreciable, st=1/2)"),
    ("1/2 + 1/3", "5/6 (FiniteAppreciable, st=5/6)"),
    ("1/2*eps", "1/2*eps (Infinitesimal, st=0)"),
    ("-1/2*H", "-1/2*H (Infinite)"),
    ("1/2^2", "1/4 (FiniteAppreciable, st=1/4)"),
    ("3 + eps - eps", "3 (FiniteAppreciable, st=3)"),
    ("H - H + eps", "eps (Infinitesimal, st=0)"),
    ("H + 1", "H + 1 (Infinite)"),
    ("42*H - 1", "42*H - 1 (Infinite)"),
    ("(42*H - 1)*eps", "42 - eps (FiniteAppreciable, st=42)"),
    ("st((42*H - 1)*eps)", "42"),
    ("(1+eps)^3", "1 + 3*eps + 3*eps^2 + eps^3 (FiniteAppreciable, st=1)"),
    ("(H+eps)^2", "H^2 + 2 + eps^2 (Infinite)"),
    ("(H-eps)*(H+eps)", "H^2 - eps^2 (Infinite)"),
    ("st(eps)", "0"),
    ("st(-7 + eps)", "-7"),
    ("st(1/3 - eps)", "1/3"),
    ("st(H*eps) + eps", "1 + eps (FiniteAppreciable, st=1)"),
    ("st(st(2+eps))", "2"),
    ("--3", "3 (FiniteAppreciable, st=3)"),
    ("2 - -3", "5 (FiniteAppreciable, st=5)"),
    ("2*-eps", "-2*eps (Infinitesimal, st=0)"),
    ("  ( 1 )  ", "1 (FiniteAppreciable, st=1)"),
    ("1000000*eps*H", "1000000 (FiniteAppreciable, st=1000000)"),
    ("123456789012345678901234567890", "123456789012345678901234567890 (FiniteAppreciable, st=123456789012345678901234567890)"),
];

/// Malformed input, pinned character offset, pinned message.
pub const MALFORMED: &[(&str, usize, &str)] = &[
    ("", 0, "expected expression"),
    ("   ", 3, "expected expression"),
    ("st(H", 4, "expected ')'"),
    ("(1+2", 4, "expected ')'"),
    ("1+", 2, "expected expression"),
    ("1+*2", 2, "expected expression, found '*'"),
    ("*1", 0, "expected expression, found '*'"),
    (")", 0, "expected expression, found ')'"),
    ("(1+2))", 5, "unexpected ')'"),
    ("1 2", 2, "unexpected integer 2"),
    ("eps H", 4, "unexpected 'H'"),
    ("1/0", 2, "denominator must be positive"),
    ("1/", 2, "malformed rational: expected denominator"),
    ("1/-2", 2, "malformed rational: expected denominator"),
    ("1/eps", 2, "malformed rational: expected denominator"),
    ("eps/2", 3, "unexpected '/'"),
    ("2^eps", 2, "expected integer exponent"),
    ("2^", 2, "expected integer exponent"),
    ("2^3^4", 3, "unexpected '^'"),
    ("st 3", 3, "expected '('"),
    ("st", 2, "expected '('"),
    ("x + 1", 0, "unknown identifier 'x'"),
    ("1 + epsilon", 4, "unknown identifier 'epsilon'"),
    ("1 + h", 4, "unknown identifier 'h'"),
    ("2 # 3", 2, "unexpected character '#'"),
    ("1.5", 1, "unexpected character '.'"),
    ("ε", 0, "unknown identifier 'ε'"),
    ("st()", 3, "expected expression, found ')'"),
    ("2^99999999999999999999", 2, "exponent too large"),
];
