//! `#[derive(Layout)]` for `#[repr(C)]` structs.
//!
//! Expands to an implementation of `typext::reflectlayout::Layout` whose
//! descriptor table is a constant. Offsets are computed by pointer
//! arithmetic on an uninitialized value during constant evaluation.

use proc_macro::TokenStream;
use proc_macro2::{Span, TokenStream as TokenStream2};
use quote::{quote, ToTokens};
use syn::{parse_macro_input, Data, DeriveInput, Error, Fields, Index, Meta};

#[proc_macro_derive(Layout)]
pub fn derive_layout(input: TokenStream) -> TokenStream {
    let input = parse_macro_input!(input as DeriveInput);
    expand(input)
        .unwrap_or_else(Error::into_compile_error)
        .into()
}

fn has_repr_c(input: &DeriveInput) -> syn::Result<bool> {
    for attr in &input.attrs {
        if !attr.path().is_ident("repr") {
            continue;
        }
        let mut found = false;
        if let Meta::List(list) = &attr.meta {
            list.parse_nested_meta(|meta| {
                if meta.path.is_ident("C") {
                    found = true;
                } else if meta.input.peek(syn::token::Paren) {
                    // align(N), packed(N): skip the argument
                    let content;
                    syn::parenthesized!(content in meta.input);
                    let _: TokenStream2 = content.parse()?;
                }
                Ok(())
            })?;
        }
        if found {
            return Ok(true);
        }
    }
    Ok(false)
}

fn expand(input: DeriveInput) -> syn::Result<TokenStream2> {
    let fields = match &input.data {
        Data::Struct(s) => &s.fields,
        Data::Enum(e) => {
            return Err(Error::new(
                e.enum_token.span,
                "Layout can only be derived for structs",
            ))
        }
        Data::Union(u) => {
            return Err(Error::new(
                u.union_token.span,
                "Layout can only be derived for structs",
            ))
        }
    };
    if !has_repr_c(&input)? {
        return Err(Error::new(
            input.ident.span(),
            "Layout requires #[repr(C)] so that fields are stored in declaration order",
        ));
    }

    let ident = &input.ident;
    let name = ident.to_string();
    let (impl_generics, ty_generics, where_clause) = input.generics.split_for_impl();

    let members: Vec<(String, TokenStream2, &syn::Type)> = match fields {
        Fields::Named(named) => named
            .named
            .iter()
            .map(|f| {
                let id = f.ident.as_ref().expect("named field");
                (id.to_string(), id.to_token_stream(), &f.ty)
            })
            .collect(),
        Fields::Unnamed(unnamed) => unnamed
            .unnamed
            .iter()
            .enumerate()
            .map(|(i, f)| {
                let index = Index {
                    index: i as u32,
                    span: Span::call_site(),
                };
                (i.to_string(), index.to_token_stream(), &f.ty)
            })
            .collect(),
        Fields::Unit => Vec::new(),
    };

    let descriptors = members.iter().map(|(field_name, access, ty)| {
        quote! {
            ::typext::reflectlayout::MemberDescriptor {
                name: #field_name,
                offset: {
                    let uninit = ::core::mem::MaybeUninit::<Self>::uninit();
                    let base = uninit.as_ptr();
                    #[allow(unused_unsafe)]
                    unsafe {
                        let field = ::core::ptr::addr_of!((*base).#access);
                        (field as *const u8).offset_from(base as *const u8) as usize
                    }
                },
                size: ::core::mem::size_of::<#ty>(),
            }
        }
    });

    Ok(quote! {
        impl #impl_generics ::typext::reflectlayout::Layout for #ident #ty_generics #where_clause {
            const NAME: &'static str = #name;
            const LAYOUT: &'static [::typext::reflectlayout::MemberDescriptor] = &[#(#descriptors),*];
        }
    })
}
