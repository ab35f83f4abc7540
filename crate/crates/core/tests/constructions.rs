use freeset::constructions::{closed_form, powers_construction, three_free_construct, ConstructionResult};
use freeset::zn::{is_t_free, CyclicContext};

fn certified(r: &ConstructionResult) -> bool {
    let ctx = CyclicContext::new(r.set.modulus(), r.t).unwrap();
    is_t_free(&ctx, &r.set).unwrap().is_t_free()
}

fn smallest_prime_5_mod_6(n: u64) -> Option<u64> {
    (2..=n).filter(|p| n % p == 0 && (2..*p).take_while(|d| d * d <= *p).all(|d| p % d != 0)).find(|p| p % 6 == 5)
}

#[test]
fn three_free_sizes_and_certificates_up_to_2000() {
    for n in 1..=2000u64 {
        let r = three_free_construct(n).unwrap();
        let want = if n % 2 == 0 {
            n / 4
        } else if let Some(p) = smallest_prime_5_mod_6(n) {
            n * (p + 1) / (6 * p)
        } else {
            n / 6
        };
        assert_eq!(r.set.len() as u64, want, "n={n}");
        assert_eq!(r.guaranteed_size as u64, want, "n={n}");
        assert!(r.set.len() as u64 <= n / 4, "n={n}");
        assert!(certified(&r), "n={n} {}", r.set);
    }
}

#[test]
fn closed_forms_certified_up_to_2000() {
    for n in 2..=2000u64 {
        for t in 1..=2 {
            let r = closed_form(n, t).unwrap();
            let want = if t == 1 { n - 1 } else { (n - 1) / 2 };
            assert_eq!(r.set.len() as u64, want);
            assert!(certified(&r), "n={n} t={t}");
        }
    }
}

#[test]
fn powers_certified_for_small_t() {
    for t in 2..=6u32 {
        for n in (u64::from(t) + 2)..=5000 {
            let r = powers_construction(n, t).unwrap();
            let m = r.set.len() as u32;
            assert!(u64::from(t).pow(m) <= n - 1 && u64::from(t).pow(m + 1) > n - 1, "n={n} t={t}");
            assert!(certified(&r), "n={n} t={t} {}", r.set);
        }
    }
}
