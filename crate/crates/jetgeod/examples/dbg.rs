use jetgeod::*;
use jetgeod::poly::one_minus_square;
fn main() {
    let f = registry::f0();
    let pt = PencilPoint::new(0.5, -0.1);
    let g = pencil_member(&f, pt);
    let iv = jetgeod::periods::central_interval(&f, pt).unwrap();
    println!("central interval: {:?}", iv);
    let den = one_minus_square(&g);
    let u = iv.hi;
    println!("den(u) = {:.3e}, den(0) = {:.3}", den.eval(u), den.eval(0.0));
    // deflate at u
    let d2 = -&den.deflate(u);
    for s in [0.0_f64, 1e-8, 1e-4, 0.1, 0.5, 1.0] {
        let x = u - s*s;
        println!("s={s:.1e} x={x:.6} d2={:.6e} den={:.6e}", d2.eval(x), den.eval(x));
    }
    // also check real_roots of den near [0,u]
    let roots = real_roots(&den, -1e-9, u + 1e-9, 1e-13).unwrap();
    println!("roots in window: {:?}", roots.iter().map(|r| (r.value, r.multiplicity)).collect::<Vec<_>>());
}
