//! The data directory: a manifest naming the metadata file, the shipped
//! character tables and the matrix models.

use std::collections::{BTreeMap, HashMap};
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex};

use num_bigint::BigUint;

use crate::chartab::CharacterTable;
use crate::error::{Error, Result};
use crate::json;
use crate::oracle::MatrixGroupModel;
use crate::rdplan::{DegreePlan, GroupMetadata};

pub const MANIFEST: &str = "manifest.json";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelEntry {
    pub name: String,
    pub path: String,
    /// Character table of the same group.
    pub table: String,
    /// Index of the character afforded by the model.
    pub character: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Manifest {
    pub metadata: String,
    pub tables: BTreeMap<String, String>,
    pub models: Vec<ModelEntry>,
}

impl Manifest {
    pub fn from_json_bytes(bytes: &[u8]) -> Result<Self> {
        let doc = json::parse_document(bytes)?;
        let root = json::object(&doc, "manifest")?;
        let metadata = json::string(json::field(root, "metadata", "manifest")?, "metadata")?;
        let tables = json::object(json::field(root, "tables", "manifest")?, "tables")?
            .iter()
            .map(|(k, v)| Ok((k.clone(), json::string(v, &format!("tables.{k}"))?)))
            .collect::<Result<_>>()?;
        let models = match root.get("models") {
            None => Vec::new(),
            Some(v) => json::array(v, "models")?
                .iter()
                .enumerate()
                .map(|(i, m)| {
                    let path = format!("models[{i}]");
                    let o = json::object(m, &path)?;
                    Ok(ModelEntry {
                        name: json::string(json::field(o, "name", &path)?, &path)?,
                        path: json::string(json::field(o, "path", &path)?, &path)?,
                        table: json::string(json::field(o, "table", &path)?, &path)?,
                        character: json::u64_of(json::field(o, "character", &path)?, &path)? as usize,
                    })
                })
                .collect::<Result<_>>()?,
        };
        Ok(Manifest { metadata, tables, models })
    }
}

/// A loaded data directory. Tables are read on first use and cached.
#[derive(Debug)]
pub struct DataDir {
    root: PathBuf,
    manifest: Manifest,
    tables: Mutex<HashMap<String, Arc<CharacterTable>>>,
}

pub(crate) fn read(path: &Path) -> Result<Vec<u8>> {
    std::fs::read(path).map_err(|source| Error::Io { path: path.to_owned(), source })
}

impl DataDir {
    pub fn open(root: impl Into<PathBuf>) -> Result<Self> {
        let root = root.into();
        let manifest = Manifest::from_json_bytes(&read(&root.join(MANIFEST))?)?;
        Ok(DataDir { root, manifest, tables: Mutex::new(HashMap::new()) })
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    pub fn manifest(&self) -> &Manifest {
        &self.manifest
    }

    pub fn metadata(&self) -> Result<GroupMetadata> {
        GroupMetadata::from_json_bytes(&read(&self.root.join(&self.manifest.metadata))?)
    }

    pub fn has_table(&self, name: &str) -> bool {
        self.manifest.tables.contains_key(name)
    }

    pub fn table(&self, name: &str) -> Result<Arc<CharacterTable>> {
        if let Some(t) = self.tables.lock().expect("table cache poisoned").get(name) {
            return Ok(Arc::clone(t));
        }
        let rel = self.manifest.tables.get(name).ok_or_else(|| Error::MissingTable(name.to_owned()))?;
        let table = Arc::new(CharacterTable::from_json_bytes(&read(&self.root.join(rel))?)?);
        if table.name() != name {
            return Err(Error::Validation(format!("{rel} holds table {}, manifest says {name}", table.name())));
        }
        self.tables.lock().expect("table cache poisoned").insert(name.to_owned(), Arc::clone(&table));
        Ok(table)
    }

    pub fn model_entry(&self, name: &str) -> Result<&ModelEntry> {
        self.manifest
            .models
            .iter()
            .find(|m| m.name == name)
            .ok_or_else(|| Error::UnknownGroup(name.to_owned()))
    }

    pub fn model(&self, name: &str) -> Result<MatrixGroupModel> {
        let entry = self.model_entry(name)?;
        MatrixGroupModel::from_json_bytes(&read(&self.root.join(&entry.path))?)
    }
}

/// Table and character index realizing a plan's representation.
pub fn plan_character(data: &DataDir, plan: &DegreePlan) -> Result<(Arc<CharacterTable>, usize)> {
    let table = data.table(&plan.table_ref)?;
    let index = table.first_character_of_degree(&BigUint::from(plan.char_degree)).ok_or_else(|| {
        Error::Validation(format!("{} has no character of degree {}", plan.table_ref, plan.char_degree))
    })?;
    Ok((table, index))
}
