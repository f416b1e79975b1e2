import type { Tag } from "./api";

// The one polarity-to-color mapping; no fourth state exists.
export const TAG_COLORS: Record<Tag["polarity"], string> = {
  negative: "red",
  neutral: "yellow",
  positive: "green",
};

export function tagChip(tag: Tag): HTMLSpanElement {
  const chip = document.createElement("span");
  chip.className = "tag-chip";
  chip.dataset.polarity = tag.polarity;
  chip.style.backgroundColor = TAG_COLORS[tag.polarity];
  chip.textContent = tag.count > 1 ? `${tag.text} ×${tag.count}` : tag.text;
  return chip;
}

export function tagRow(tags: Tag[]): HTMLDivElement {
  const row = document.createElement("div");
  row.className = "tag-row";
  for (const tag of tags) row.appendChild(tagChip(tag));
  return row;
}
