import { ApiError, listServices, submitReview } from "./api";
import { tagRow } from "./tags";

// POSTs a new review, then shows the server's verdict verbatim: predicted
// class, polarity, and the extracted tags.

export function createSubmitView(onSubmitted: () => void): HTMLElement {
  const view = document.createElement("section");
  view.id = "submit-view";

  const form = document.createElement("form");
  form.id = "submit-form";

  const select = document.createElement("select");
  select.id = "submit-service";

  const textarea = document.createElement("textarea");
  textarea.id = "submit-text";
  textarea.placeholder = "How was the food?";
  textarea.rows = 4;

  const button = document.createElement("button");
  button.type = "submit";
  button.textContent = "Submit review";

  const inlineError = document.createElement("p");
  inlineError.id = "submit-error";
  inlineError.className = "inline-error";

  const confirmation = document.createElement("div");
  confirmation.id = "submit-confirmation";

  form.append(select, textarea, button, inlineError);
  view.append(form, confirmation);

  async function loadServices(): Promise<void> {
    try {
      const services = await listServices();
      select.replaceChildren(
        ...services.map((s) => {
          const option = document.createElement("option");
          option.value = s.id;
          option.textContent = s.name;
          return option;
        }),
      );
    } catch {
      inlineError.textContent = "could not load services";
    }
  }
  void loadServices();

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    void handleSubmit();
  });

  async function handleSubmit(): Promise<void> {
    inlineError.textContent = "";
    const text = textarea.value.trim();
    if (!text) {
      inlineError.textContent = "Please write something first.";
      return;
    }
    try {
      const response = await submitReview(select.value, text);
      confirmation.replaceChildren();
      const verdict = document.createElement("p");
      verdict.id = "submit-verdict";
      verdict.textContent =
        `Saved. Predicted class ${response.sentiment_class} (${response.polarity}).`;
      confirmation.append(verdict, tagRow(response.tags));
      textarea.value = "";
      onSubmitted();
    } catch (error) {
      if (error instanceof ApiError && error.status === 409) {
        inlineError.textContent = "model not loaded";
      } else if (error instanceof ApiError) {
        inlineError.textContent = error.message;
      } else {
        inlineError.textContent = `submit failed: ${
          error instanceof Error ? error.message : error}`;
      }
    }
  }

  return view;
}
