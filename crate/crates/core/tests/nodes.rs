use keli::make_context;
use keli::nodes::{build_node_table, load_node_table, persist_node_table, NodeValueTable};
use keli::Error;
use sha2::{Digest, Sha256};

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

#[test]
fn persist_and_load_round_trip() {
    let ctx = make_context(80).unwrap();
    let table = build_node_table(8, &ctx).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("nodes.knt");
    persist_node_table(&table, &path).unwrap();
    let back = load_node_table(&path).unwrap();
    assert_eq!(back, table);
    // a second write is byte-identical
    let first = std::fs::read(&path).unwrap();
    persist_node_table(&back, &path).unwrap();
    assert_eq!(std::fs::read(&path).unwrap(), first);
}

#[test]
fn cache_bytes_are_pinned() {
    let ctx = make_context(50).unwrap();
    let text = build_node_table(5, &ctx).unwrap().to_text();
    let digest = hex(&Sha256::digest(text.as_bytes()));
    // values checked against an independent 70-digit evaluation before pinning
    assert_eq!(digest, "8b187ad3c29d830e90f69ca22dbe01eb27e707a692b88cfca51089e7da7c5e2e");
}

#[test]
fn missing_and_damaged_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("absent.knt");
    assert!(matches!(load_node_table(&path), Err(Error::Io { .. })));

    let ctx = make_context(40).unwrap();
    let text = build_node_table(4, &ctx).unwrap().to_text();
    let cut: String = text.lines().take(5).map(|l| format!("{l}\n")).collect();
    assert!(matches!(NodeValueTable::from_text(&cut), Err(Error::Truncated { declared: 4, found: 2 })));
}
