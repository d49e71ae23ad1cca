use orientcount::certify::{certify_configurations, certify_section2, FAMILIES};
use orientcount::extension::{ext, ExtConfig};
use orientcount::{parse_graph6, VertexSet};

#[test]
fn every_family_passes() {
    let certs = certify_section2().unwrap();
    for c in &certs {
        println!(
            "{:<45} configs={:<5} attained={:<4} bound={:<4} {:?}",
            c.claim_id, c.configurations, c.attained, c.bound, c.verdict
        );
    }
    for f in FAMILIES {
        let fam: Vec<_> = certs.iter().filter(|c| c.family == f).collect();
        assert!(!fam.is_empty(), "{f}");
        for c in fam {
            assert!(c.verdict.passed(), "{}: {:?}", c.claim_id, c.violations);
        }
    }
}

#[test]
fn vertex_clique_is_tight_everywhere() {
    let certs = certify_section2().unwrap();
    for c in certs.iter().filter(|c| c.family == "vertex-clique") {
        assert_eq!(c.attained, c.bound, "{}", c.claim_id);
    }
}

#[test]
fn extremal_records_reproduce() {
    for c in certify_section2().unwrap() {
        if c.family == "p5-square" {
            continue;
        }
        let g = parse_graph6(&c.host_graph6).unwrap();
        let cfg = ExtConfig::new(g, VertexSet(c.a_mask), VertexSet(c.b_mask)).unwrap();
        let r = ext(&cfg).unwrap();
        assert_eq!(r.value, c.attained, "{}", c.claim_id);
        assert_eq!(r.witness.bit_string(), c.witness);
    }
}

#[test]
fn report_is_deterministic() {
    let a = serde_json::to_string(&certify_configurations().unwrap()).unwrap();
    let b = serde_json::to_string(&certify_configurations().unwrap()).unwrap();
    assert_eq!(a, b);
}
