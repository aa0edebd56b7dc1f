use qfano::data::{self, m_ring, matrix_m, minor, minor_triples};
use qfano::poly::{Field, Poly};
use sha2::{Digest, Sha256};

const SHA256: [(&str, &str); 15] = [
    ("matrix_m.txt", "82c5ec73b33560d1c4861ac3575df633dffb101b9dcaa9645868b2997d7b055a"),
    ("minors.txt", "428bf45b063e3872195633333bcbe46c6b48ee86ac57fbfc497d93803c88fe3e"),
    ("hypersurface.txt", "ffebf3d39b68d40b66e487d1a589eed88e30ce7c37b4d3d0014520b2e666f748"),
    ("equations_f.txt", "f6297e5e912f1f240765434b6c3fc290954a0b12e8dab71adf6fb92a50f2b88a"),
    ("exceptional_param.txt", "6167a3caa782e3bf3d19686f9b2f1afad8484ada2b5732704d888e15d4ee8bb4"),
    ("smooth_point.txt", "e89e1256431fbb71c3a2556b8719a67d7efab383d6162700639f490e14fc2992"),
    ("charts_s135.txt", "bf0267e724006817c74da4c81d7a3b92a3c97c89484c01f1f90ee36db3cc1333"),
    ("charts_s124.txt", "daff57eaada95dd228dc48afe02327c7535dd2a81a5825c6a0592b41f1a5a1e4"),
    ("charts_s123.txt", "ef744d2deee2308dec34a220d4dc795b15034a0a83ca90a3b4d004828be188d2"),
    ("charts_s246.txt", "5686d6bc857c76d6d16f930b0f6cff52ca3a4c4088d234ebc3ca735c99cc0cfc"),
    ("transitions.txt", "76df74de4c4f729132202ebe56ab27b3dcde493163189afb1ce2e8154aac0fa0"),
    ("families.txt", "1db828c322fd8c88e7954a20b40150137b829455c2f0fc24594e079510be9c0c"),
    ("weights_stage_one.txt", "9c89b156b1d50906d5060421e62475d512b061fd792b3ba40e01c7e6e0c033e8"),
    ("weights_stage_two_dp.txt", "27e8ebd40a30557d2eafabb60a2298ab62c0fb12fb9edd7ccaa6d71e97a69266"),
    ("weights_stage_two_div.txt", "9cc9d3927d6751bf72035472773671d3de5d03cfb161fa6f22ac313a740c7fc7"),
];

#[test]
fn data_files_are_unchanged() {
    assert_eq!(data::FILES.len(), SHA256.len());
    for ((name, text), (want_name, want)) in data::FILES.iter().zip(SHA256) {
        assert_eq!(*name, want_name);
        let got: String = Sha256::digest(text.as_bytes()).iter().map(|b| format!("{:02x}", b)).collect();
        assert_eq!(got, want, "{} changed", name);
    }
}

#[test]
fn minors_match_cofactor_expansion() {
    let r = m_ring(Field::Rationals);
    let m = matrix_m(&r).unwrap();
    assert_eq!((m.rows(), m.cols()), (3, 6));
    for a in 0..6 {
        for b in a + 1..6 {
            for c in b + 1..6 {
                let e = |i: usize, j: usize| m.get(i, [a, b, c][j]).clone();
                let cof = |i: usize, j: usize, k: usize, l: usize| &(&e(i, j) * &e(k, l)) - &(&e(i, l) * &e(k, j));
                let want: Poly = &(&(&e(0, 0) * &cof(1, 1, 2, 2)) - &(&e(0, 1) * &cof(1, 0, 2, 2))) + &(&e(0, 2) * &cof(1, 0, 2, 1));
                assert_eq!(minor(&r, [a + 1, b + 1, c + 1]).unwrap(), want, "D{}{}{}", a + 1, b + 1, c + 1);
            }
        }
    }
    assert_eq!(minor_triples().len(), 8);
}

#[test]
fn families_load() {
    let ids = data::family_ids();
    assert_eq!(ids.len(), 7);
    for id in ids {
        let f = data::family(id).unwrap();
        let ring = f.ring(Field::Rationals);
        for (target, p) in f.sections(0).substitution(&f, &ring).unwrap() {
            assert_eq!(p.homogeneous_weight(0), f.weight(&target), "family {} section {}", id, target);
        }
    }
}
