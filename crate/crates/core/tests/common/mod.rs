#![allow(dead_code)]

use std::sync::OnceLock;

use keli::combinatorics::CMatrix;
use keli::lambda::{solve_alphas, LambdaEvaluator};
use keli::mp::parse_real;
use keli::nodes::{build_node_table, NodeValueTable};
use keli::{make_context, PrecisionContext};
use rug::{Complex, Float};

/// Desk-scale run: 60 nodes at 600 digits.
pub const TIER_A_NODES: usize = 60;
pub const TIER_A_DIGITS: u32 = 600;

pub struct TierA {
    pub ctx: PrecisionContext,
    pub table: NodeValueTable,
    pub ev: LambdaEvaluator,
}

pub fn tier_a() -> &'static TierA {
    static CELL: OnceLock<TierA> = OnceLock::new();
    CELL.get_or_init(|| {
        let ctx = make_context(TIER_A_DIGITS).unwrap();
        let table = build_node_table(TIER_A_NODES, &ctx).unwrap();
        let alphas = solve_alphas(&table, &CMatrix::new(TIER_A_NODES), &ctx).unwrap();
        let ev = LambdaEvaluator::new(alphas, &ctx).unwrap().with_target_digits(40);
        TierA { ctx, table, ev }
    })
}

pub fn real(text: &str) -> Float {
    parse_real(text.trim_start_matches('+'), 512).unwrap()
}

/// Digits of relative agreement of `a` with `b`.
pub fn agree(a: &Float, b: &Float) -> f64 {
    if a == b {
        return f64::INFINITY;
    }
    let d = Float::with_val(a.prec().max(b.prec()), a - b);
    b.clone().abs().log10().to_f64() - d.abs().log10().to_f64()
}

/// Digits of relative agreement measured against `|b|`.
pub fn agree_complex(a: &Complex, b: &Complex) -> f64 {
    let d = Complex::with_val(a.prec().0.max(b.prec().0), a - b);
    let scale = Float::with_val(b.prec().0, b.abs_ref());
    let diff = Float::with_val(d.prec().0, d.abs_ref());
    if diff.is_zero() {
        return f64::INFINITY;
    }
    scale.log10().to_f64() - diff.log10().to_f64()
}

pub fn complex(ctx: &PrecisionContext, re: &str, im: &str) -> Complex {
    Complex::with_val(ctx.bits(), (real(re), real(im)))
}

/// Published `ν_q`, even `q = 2..=100`, truncated to the printed digits.
pub const NU_REFERENCE: [(usize, &str); 50] = [
    (2, "+0.02309880228342410477676"),
    (4, "-3.09371683415265473898551e-6"),
    (6, "+3.99563862364130457659708e-10"),
    (8, "-3.27824357039932711305067e-14"),
    (10, "+1.76392629840597191777657e-18"),
    (12, "-6.59627891032903838271624e-23"),
    (14, "+1.80261444818246697993196e-27"),
    (16, "-3.74736154391950164309719e-32"),
    (18, "+6.11810655404482213334562e-37"),
    (20, "-8.04817820960504164857545e-42"),
    (22, "+8.71024161173990434824121e-47"),
    (24, "-7.89068457371063872283140e-52"),
    (26, "+6.07081114243696016469182e-57"),
    (28, "-4.01587422754198410193234e-62"),
    (30, "+2.30844971213622297522396e-67"),
    (32, "-1.16377839639253155696203e-72"),
    (34, "+5.18728213721269917981043e-78"),
    (36, "-2.05888534722165928961667e-83"),
    (38, "+7.32335119718293754341258e-89"),
    (40, "-2.34773116294318251393756e-94"),
    (42, "+6.81833532608446481157505e-100"),
    (44, "-1.80227218111087326835362e-105"),
    (46, "+4.35424835644143355581914e-111"),
    (48, "-9.65244348501740815297633e-117"),
    (50, "+1.97030904453223286494014e-122"),
    (52, "-3.71555761198429619773612e-128"),
    (54, "+6.49258343052437384400981e-134"),
    (56, "-1.05421694242702688088472e-139"),
    (58, "+1.59474155608185521648247e-145"),
    (60, "-2.25294307373602141627739e-151"),
    (62, "+2.97914651803794175924608e-157"),
    (64, "-3.69517072450445348716074e-163"),
    (66, "+4.30764976283456534150343e-169"),
    (68, "-4.72846130133675037412305e-175"),
    (70, "+4.89593763803612367116558e-181"),
    (72, "-4.78969877335282803113918e-187"),
    (74, "+4.43421544651753315851101e-193"),
    (76, "-3.89049717124414378471014e-199"),
    (78, "+3.23953700394635420564962e-205"),
    (80, "-2.56347470179527007809013e-211"),
    (82, "+1.93016009986758730625039e-217"),
    (84, "-1.38451965124125144443245e-223"),
    (86, "+9.47207038215670964053694e-230"),
    (88, "-6.18737104625455547641056e-236"),
    (90, "+3.86310767899485779731587e-242"),
    (92, "-2.30765437211820309137206e-248"),
    (94, "+1.32014954392263640848456e-254"),
    (96, "-7.239214761041347767608271e-261"),
    (98, "+3.808525079929498330272627e-267"),
    (100, "-1.923910187529987426921984e-273"),
];
