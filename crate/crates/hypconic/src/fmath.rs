//! f64 math routed through `std` when available and `libm` otherwise.

#![allow(dead_code)]

macro_rules! shim {
    ($(fn $name:ident($($arg:ident),+) => $libm:ident;)*) => {
        $(
            #[cfg(feature = "std")]
            #[inline(always)]
            pub(crate) fn $name($($arg: f64),+) -> f64 { f64::$name($($arg),+) }

            #[cfg(not(feature = "std"))]
            #[inline(always)]
            pub(crate) fn $name($($arg: f64),+) -> f64 { libm::$libm($($arg),+) }
        )*
    };
}

shim! {
    fn sqrt(x) => sqrt;
    fn cbrt(x) => cbrt;
    fn ln(x) => log;
    fn ln_1p(x) => log1p;
    fn exp(x) => exp;
    fn sin(x) => sin;
    fn cos(x) => cos;
    fn atan(x) => atan;
    fn atan2(y, x) => atan2;
    fn asin(x) => asin;
    fn acos(x) => acos;
    fn sinh(x) => sinh;
    fn cosh(x) => cosh;
    fn tanh(x) => tanh;
    fn atanh(x) => atanh;
    fn mul_add(a, b, c) => fma;
    fn hypot(x, y) => hypot;
}
