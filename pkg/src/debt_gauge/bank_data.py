"""Canonical question bank: the 68-question self-assessment instrument.

Each entry carries the question wording shipped to respondents, the
stakeholder routing, the hidden 1-5 significance weight, and the
justification/example text shown on request. A handful of entries carry
an erratum note where the source instrument reuses wording; the notes
point at the justification that disambiguates them.
"""

SCHEMA_VERSION = "1"
BANK_VERSION = "1.0.0"

QUESTIONS = [
    {
        "id": 1,
        "type": "Algorithm",
        "stakeholder": "Organizers & Participants",
        "weight": 3,
        "text": "Have you checked if the framework you are using has technical debt or may introduce glitches or incompatibility in your application?",
        "justification": "Identifying and understanding the technical debt within the framework is essential. It can affect the application's performance, scalability, and even the user experience. Glitches and incompatibilities can lead to a poor reputation and user frustration.",
        "example": "If the platform is using an outdated version of TensorFlow, it might miss out on new optimizations that could speed up model training. If the chosen framework has a history of memory leaks, it could affect the platform's ability to scale and handle multiple concurrent games.",
    },
    {
        "id": 2,
        "type": "ArchitecturalDesign",
        "stakeholder": "Organizers",
        "weight": 5,
        "text": "Have you effectively separated concerns and ensured that code reuse does not lead to tightly coupled components?",
        "justification": "Poor separation of concerns can lead to a tangled system that is hard to debug and evolve, significantly increasing technical debt.",
        "example": "Using interfaces or abstract classes to define contracts between components, so they can be easily swapped or modified without affecting others.",
    },
    {
        "id": 3,
        "type": "ArchitecturalDesign",
        "stakeholder": "Organizers & Participants",
        "weight": 3,
        "text": "Pipeline Jungle - Is it possible to maintain a single controllable, straightforward pipeline of ML components?",
        "justification": "A convoluted pipeline can be difficult to maintain and upgrade, contributing to technical debt over time.",
        "example": "Multiple data preprocessing steps scattered across the pipeline, making it hard to track changes and fix bugs.\ne.g. Have you designed separate modules/services for data collection and data preparation?\ne.g. Have you checked for improper reuse of complete AI components or pipelines?",
    },
    {
        "id": 4,
        "type": "ArchitecturalDesign",
        "stakeholder": "Organizers & Participants",
        "weight": 2,
        "text": "Does your system include glue code?",
        "justification": "Glue code is often a quick fix that becomes permanent, increasing technical debt as the system scales.",
        "example": "Temporary scripts that become a permanent part of the workflow, complicating future updates.",
    },
    {
        "id": 5,
        "type": "ArchitecturalDesign",
        "stakeholder": "Participants",
        "weight": 3,
        "text": "Have you avoided reusing a slightly modified complete model (correction cascades)?",
        "justification": "Correction cascades can create a maintenance nightmare, adding to the technical debt each time the base model is updated.",
        "example": "A small change in the base model requiring adjustments in all derived models",
    },
    {
        "id": 6,
        "type": "ArchitecturalDesign",
        "stakeholder": "Organizers",
        "weight": 4,
        "text": "Have you designed the environment for prototyping ML models to prevent the need to re-implement from scratch for production?",
        "justification": "The need to re-implement models for production can lead to redundant work and increased technical debt.",
        "example": "A model developed in a research setting that requires significant refactoring to be deployed in production.",
    },
    {
        "id": 7,
        "type": "Build",
        "stakeholder": "Organizers & Participants",
        "weight": 4,
        "text": "Have you installed a proper version control system for model, training and test data?",
        "justification": "Ensuring that your app is free from bad or suboptimal dependencies is crucial for maintaining the integrity, performance, and security of your application. Bad or suboptimal dependencies can contribute to build debt by causing conflicts, reducing performance, and making the build process more fragile.",
        "example": "A reinforcement learning platform might rely on a specific machine learning library for neural network computations. If this library is not kept up-to-date or is known to have performance issues, it could hinder the platform's ability to scale or adapt to new challenges.",
        "erratum_note": "Wording duplicates questions 8 and 63; the justification (dependency hygiene) identifies this question's intended topic.",
    },
    {
        "id": 8,
        "type": "Build",
        "stakeholder": "Organizers",
        "weight": 3,
        "text": "Have you installed a proper version control system for model, training and test data?",
        "justification": "Cross-platform compatibility is important for reaching a wider audience and ensuring that your app can operate on various devices and operating systems. Inability to build consistently across different platforms can be indicative of build debt, as it suggests a lack of portability and potential issues with platform-specific dependencies.",
        "example": "Ensure that the platform can be deployed on both Windows and Linux systems, which might require different sets of dependencies and configurations.",
        "erratum_note": "Wording duplicates questions 7 and 63; the justification (cross-platform build consistency) identifies this question's intended topic.",
    },
    {
        "id": 9,
        "type": "Code",
        "stakeholder": "Organizers",
        "weight": 5,
        "text": "Have you identified and refactored low-quality, complex, and duplicated code sections, including dead codepaths and centralized scattered code, while ensuring clear component and code APIs?",
        "justification": "Dead codepaths can significantly impact performance and maintainability of the codebase. Identifying and removing them ensures efficient resource utilization and reduces the chances of bugs or unexpected behavior. Low-quality code can impede readability, maintainability, and scalability. Detecting and addressing it early can prevent technical debt accumulation and streamline development efforts. Complex code can be challenging to understand, debug, and maintain. Identifying complex sections allows for simplification, leading to improved code quality and developer productivity. Centralizing scattered and duplicated code improves maintainability and reduces the likelihood of inconsistencies. It promotes code reuse and ensures uniformity across the codebase.",
        "example": "Suppose a section of the platform's codebase contains duplicate functions for calculating player scores. Refactoring would involve removing the redundancy, centralizing the score calculation, and ensuring that the remaining function has a clear API that can be used by other components of the platform. An example of this type of technical debt would be a function that has grown too large and complex over time, making it difficult to understand and modify. Refactoring it into smaller, well-named functions can improve readability and maintainability. After identifying a set of functions with tightly coupled logic, you refactor them to reduce dependencies and define clear interfaces. This makes the code easier to understand and modify, which is beneficial when adding new features or debugging. An example here would be updating an API to use RESTful principles, making it easier for developers to understand how to interact with it and for the system to integrate with other service.",
    },
    {
        "id": 10,
        "type": "Configuration",
        "stakeholder": "Organizers",
        "weight": 3,
        "text": "Is it easy to specify a configuration as a small change from a previous configuration?",
        "justification": "In RL, quick experimentation is crucial. Being able to specify configuration changes easily allows rapid iteration and model improvement.",
        "example": "A platform allows incremental changes to the learning rate of an RL agent by modifying a single line in a YAML file, facilitating quick experimentation.",
        "erratum_note": "Questions 10, 11 and 12 share identical wording; the justification (small incremental configuration changes) identifies this question's intended topic.",
    },
    {
        "id": 11,
        "type": "Configuration",
        "stakeholder": "Organizers",
        "weight": 4,
        "text": "Is it easy to specify a configuration as a small change from a previous configuration?",
        "justification": "Proper documentation facilitates understanding and maintenance of configurations.",
        "example": "A platform's configuration file lacks comments explaining the purpose of each parameter, leading to confusion among developers.",
        "erratum_note": "Questions 10, 11 and 12 share identical wording; the justification (configuration documentation) identifies this question's intended topic.",
    },
    {
        "id": 12,
        "type": "Configuration",
        "stakeholder": "Organizers",
        "weight": 4,
        "text": "Is it easy to specify a configuration as a small change from a previous configuration?",
        "justification": "Reviewing configurations is crucial for identifying errors, optimizing performance, and maintaining consistency. Testing ensures that configurations perform as expected under different conditions. Rigorous testing ensures robustness and reliable performance. Review and testing are vital to catch and identify errors early, optimizing performance, maintaining consistency and ensure the system behaves as expected under various configurations.",
        "example": "A platform undergoes a peer review process for configuration changes, followed by automated tests to validate the new settings.",
        "erratum_note": "Questions 10, 11 and 12 share identical wording; the justification (configuration review and testing) identifies this question's intended topic.",
    },
    {
        "id": 13,
        "type": "Data",
        "stakeholder": "Participants",
        "weight": 4,
        "text": "Have you checked for spurious data?",
        "justification": "Spurious data can introduce noise and lead to overfitting, which increases technical debt due to the need for additional debugging and retraining.",
        "example": "Identifying and removing outliers from player score datasets that do not align with expected patterns.",
    },
    {
        "id": 14,
        "type": "Data",
        "stakeholder": "Participants",
        "weight": 5,
        "text": "Have you checked your data for accuracy?",
        "justification": "Inaccurate data can mislead the training process, resulting in models that perform poorly in real-world scenarios, thus accumulating technical debt.",
        "example": "Verifying the correctness of reward signals in the game environment to ensure they reflect the intended game mechanics.",
    },
    {
        "id": 15,
        "type": "Data",
        "stakeholder": "Participants",
        "weight": 4,
        "text": "Have you checked your data for completeness?",
        "justification": "Incomplete data can result in underfitting and poor generalization, leading to technical debt when the model fails to perform as expected.",
        "example": "Ensuring that the dataset includes a wide range of scenarios that a player might encounter in the game.",
    },
    {
        "id": 16,
        "type": "Data",
        "stakeholder": "Participants",
        "weight": 4,
        "text": "Have you checked your data for trustworthiness?",
        "justification": "Untrustworthy data can stem from biased or manipulated sources, increasing technical debt by causing the model to learn incorrect behaviors.",
        "example": "Assessing the reliability of data sources, such as player feedback, to confirm they are not influenced by external incentives.",
    },
    {
        "id": 17,
        "type": "Data",
        "stakeholder": "Participants",
        "weight": 3,
        "text": "Have you performed testing on the input features?",
        "justification": "Testing input features is essential to ensure they are predictive and relevant, reducing technical debt by preventing the inclusion of irrelevant or redundant features.",
        "example": "Conducting feature selection to determine the most significant inputs for predicting player engagement.",
    },
    {
        "id": 18,
        "type": "Data",
        "stakeholder": "Participants",
        "weight": 3,
        "text": "Have you checked your data for data relevance",
        "justification": "Irrelevant data can lead to a model that does not adapt well to the task, increasing technical debt through unnecessary complexity and maintenance.",
        "example": "Filtering out gameplay data that does not contribute to the learning objective, such as background art elements.",
    },
    {
        "id": 19,
        "type": "Defect",
        "stakeholder": "Participants",
        "weight": 5,
        "text": "Have you checked that there is no error in the training data collection that would cause a significant training data set to be lost or delayed?",
        "justification": "Ensuring error-free training data collection is paramount. Errors in training data can introduce biases and inaccuracies that compound over time, leading to significant technical debt.",
        "example": "For example, if a racing game's training data incorrectly labels off-track excursions as successful maneuvers, the model may learn to drive off-track, requiring extensive retraining and data cleansing later",
    },
    {
        "id": 20,
        "type": "Defect",
        "stakeholder": "Participants",
        "weight": 4,
        "text": "Have you made the right choice in the hyperparameter values?",
        "justification": "Choosing the right hyperparameters is essential for model performance and efficiency. Incorrect hyperparameter values can lead to suboptimal performance or slow convergence, impacting the overall effectiveness of the model.",
        "example": "For instance, incorrect learning rates can cause a model to converge too slowly or not at all, impacting the speed of iteration and potentially leading to a backlog of updates.",
    },
    {
        "id": 21,
        "type": "Defect",
        "stakeholder": "Participants",
        "weight": 4,
        "text": "Have you made sure that there is no degradation in view prediction quality due to data changes, different code paths, etc.?",
        "justification": "Ensuring that changes in data or code paths do not degrade view prediction quality is critical in RL games. Even minor degradation in view prediction quality can affect the player's experience and the game's overall performance.",
        "example": "An example is a strategy game where unit strengths may change over time; if the model cannot adapt to these changes, its strategies may become obsolete.",
    },
    {
        "id": 22,
        "type": "Defect",
        "stakeholder": "Participants",
        "weight": 5,
        "text": "Have you quality inspected and validated the model for adequacy before releasing it to production?",
        "justification": "Quality inspection and validation of the model before releasing it to production are essential in RL games to ensure that the model performs adequately and meets the desired performance criteria. Releasing an inadequately validated model can lead to poor player experience which is a form of technical debt that is often expensive to address post-release and potentially damage the game's reputation.",
        "example": "For example, a model that hasn't been validated for a shooter game might misclassify in-game objects, leading to frustrating gameplay and the need for urgent patches.",
    },
    {
        "id": 23,
        "type": "Defect",
        "stakeholder": "Organizers & Participants",
        "weight": 4,
        "text": "Have you implemented mechanisms for rapid adaptation and regular updates to maintain the model's efficiency and relevance in response to changes in data, features, modeling, or infrastructure?",
        "justification": "Implementing mechanisms for rapid adaptation is essential in the fast-paced environment of games, where data and features can change frequently. Without this, the model may quickly become outdated, accumulating technical debt.",
        "example": "For example, in a multiplayer online battle arena (MOBA) game, new characters and abilities are introduced regularly; without rapid adaptation, the model's strategies could become ineffective.",
    },
    {
        "id": 24,
        "type": "Documentation",
        "stakeholder": "Organizers",
        "weight": 5,
        "text": "Is Requirement Documentation available?",
        "justification": "Requirement documentation is crucial for understanding the goals and objectives of the project, as well as the functionalities expected from the system. Without it, development might lack direction or focus, leading to potential misunderstandings and misalignments.",
        "example": "If the platform's matchmaking algorithm requirements are not well-documented, developers might implement incorrect or suboptimal features that could require significant rework.",
    },
    {
        "id": 25,
        "type": "Documentation",
        "stakeholder": "Organizers",
        "weight": 5,
        "text": "Is Technical Documentation available?",
        "justification": "Technical documentation provides insight into the system's architecture, components, and functionalities from a technical perspective. It aids developers in understanding how different parts of the system interact and how to implement or modify them effectively.",
        "example": "Without proper documentation, understanding the integration of a new game into the platform could become a time-consuming and error-prone process.",
    },
    {
        "id": 26,
        "type": "Documentation",
        "stakeholder": "Organizers & Participants",
        "weight": 5,
        "text": "Is End-user Documentation available?",
        "justification": "End-user documentation, such as tutorials and help guides, is important for user satisfaction and reducing support costs.",
        "example": "Poorly documented features may lead to user frustration and increased support queries, impacting the platform's reputation.",
    },
    {
        "id": 27,
        "type": "Documentation",
        "stakeholder": "Organizers & Participants",
        "weight": 5,
        "text": "Is the documentation clear?",
        "justification": "Clarity is essential for effective communication in documentation. Clear documentation enables users and developers to easily understand the information presented without ambiguity or confusion, enhancing usability and efficiency.",
        "example": "Ambiguous documentation on how to submit scores for a competition could result in inconsistent data submissions, affecting the leaderboard's integrity.",
    },
    {
        "id": 28,
        "type": "Documentation",
        "stakeholder": "Organizers & Participants",
        "weight": 5,
        "text": "Is the documentation up to date?",
        "justification": "Keeping documentation up to date is vital as outdated documentation can mislead developers and users, leading to the implementation of deprecated features or the use of older platform versions.",
        "example": "If the documentation does not reflect recent changes to the competition rules, participants might follow outdated guidelines, leading to disqualification or confusion.",
    },
    {
        "id": 29,
        "type": "Ethics",
        "stakeholder": "Organizers & Participants",
        "weight": 5,
        "text": "Do you know the implementation rules, how to raise questions for clarification, and resolve conflicting interpretations of essentially contested concepts?",
        "justification": "Knowing the implementation rules is crucial for ensuring that the competition is fair and that all participants have a clear understanding of what is expected. This knowledge helps maintain the integrity of the competition and prevents ethical breaches.",
        "example": "In the RangL competition platform, clear implementation rules ensure that participants can optimize strategies within ethical boundaries.",
    },
    {
        "id": 30,
        "type": "Ethics",
        "stakeholder": "Organizers & Participants",
        "weight": 5,
        "text": "Do you know the consequences of non-compliance?",
        "justification": "Awareness of the consequences of non-compliance is essential to deter unethical behavior and ensure adherence to the competition's rules. It also helps in maintaining a level playing field for all participants.",
        "example": "In gaming competitions, non-compliance with rules can lead to disqualification or legal actions, as seen in cases where anti-competitive collusion resulted in fines and penalties. i.e. especially for Game Jams",
    },
    {
        "id": 31,
        "type": "Infrastructure",
        "stakeholder": "Organizers",
        "weight": 4,
        "text": "Are there mechanisms in place for automated monitoring and alerting of infrastructure performance metrics (e.g., CPU usage, memory utilization, network throughput)?",
        "justification": "- Maintainability: Automated monitoring can reduce technical debt by making it easier to maintain the system.\n- Future-proofing: Early detection of performance issues can prevent the accumulation of technical debt related to system degradation",
        "example": "Implementing comprehensive monitoring from the start can avoid the need for costly refactoring of the monitoring system later on. Our competition's infrastructure includes an automated monitoring system that continuously tracks CPU and GPU usage, memory utilization, and network throughput. If any metric crosses a predefined threshold, such as CPU usage exceeding 90%, the system triggers an alert to our technical team, prompting immediate investigation and intervention to prevent any performance degradation during the competition.",
    },
    {
        "id": 32,
        "type": "Infrastructure",
        "stakeholder": "Organizers & Participants",
        "weight": 3,
        "text": "Has provision been made in the infrastructure for sufficient computing resources available?",
        "justification": "- Scalability: While important, over-provisioning resources can lead to unnecessary complexity and costs, contributing to technical debt.\n- Cost Management: Balancing resources with actual needs can minimize expenses and reduce the risk of investing in technologies that may become obsolete.",
        "example": "Investing in scalable cloud services can prevent over-commitment to a particular infrastructure setup, reducing long-term technical debt.",
    },
    {
        "id": 33,
        "type": "Infrastructure",
        "stakeholder": "Organizers",
        "weight": 5,
        "text": "Have you developed a robust data pipeline for easy experimentation with AI algorithms?",
        "justification": "Ensuring the competition platform provides necessary infrastructure for efficient experimentation is crucial. A robust data pipeline allows participants to quickly iterate, test various algorithms, and refine their models, enhancing the quality of submissions and boosting platform competitiveness. Effective infrastructure management is key to the success of AI-based competitions.",
        "example": "Suppose a participant wants to explore different machine learning models for a computer vision task in an image recognition competition. Having a robust data pipeline allows them to effortlessly preprocess large datasets, train multiple models with different architectures and hyperparameters, and evaluate their performance, facilitating rapid experimentation and optimization.",
    },
    {
        "id": 34,
        "type": "Infrastructure",
        "stakeholder": "Organizers & Participants",
        "weight": 4,
        "text": "Have you automated pipelines for model training, deployment, and integration?",
        "justification": "Automated pipelines are essential for managing AI models on the competition platform. They streamline processes for both organizers and participants by reducing manual effort, minimizing errors, and ensuring consistent model deployment and integration. This enhances the platform's scalability and efficiency, enabling seamless management of numerous submissions and models.",
        "example": "Imagine an organizer hosting a competition where participants need to deploy their trained models to make predictions on new data. With automated pipelines in place, participants can simply upload their model artifacts to the platform, and the system automatically handles the deployment process, integrating the models into the competition framework for evaluation without manual intervention. This streamlines the submission process and accelerates the deployment of new models on the platform.",
    },
    {
        "id": 35,
        "type": "Model",
        "stakeholder": "Organizers & Participants",
        "weight": 4,
        "text": "Are you detecting direct feedback loops or hidden feedback loops?",
        "justification": "Feedback loops can significantly distort the learning process, leading to suboptimal or even harmful behaviors in the model. Detecting them early is essential to prevent the amplification of biases and errors.",
        "example": "In a game where an AI agent is trained to collect rewards, a direct feedback loop might occur if the agent learns to manipulate the game environment to generate rewards without performing the intended task. A hidden feedback loop could arise if the agent's actions inadvertently change the environment in a way that affects the agent's future state evaluations, leading to unintended strategies.",
    },
    {
        "id": 36,
        "type": "Model",
        "stakeholder": "Participants",
        "weight": 5,
        "text": "Is model quality validated before serving?",
        "justification": "Validation ensures that the model performs as expected on unseen data and in real-world scenarios. It's a safeguard against deploying models that might perform well in training but fail in practice.",
        "example": "Before deploying a model trained to play chess, it should be validated against a diverse set of opponents and scenarios to ensure it doesn't just exploit patterns seen during training but can generalize its strategy to new games.",
    },
    {
        "id": 37,
        "type": "Model",
        "stakeholder": "Participants",
        "weight": 3,
        "text": "Does the model allow debugging by observing the step-by-step computation of training or inference on a single example?",
        "justification": "The ability to debug a model at a granular level is important for understanding and improving its decision-making process. However, it might be less critical than the other two questions if the model is performing well overall.",
        "example": "If an AI agent makes an unexpected move in a game, being able to step through the computation process can help identify why that decision was made, whether it was due to a flaw in the model or an unforeseen aspect of the game environment.",
    },
    {
        "id": 38,
        "type": "PeopleSocial",
        "stakeholder": "Organizers",
        "weight": 5,
        "text": "Is there a system in place to ensure project continuity through team member overlap and retention of the original development team's knowledge?",
        "justification": "Ensuring project continuity through team member overlap and knowledge retention is paramount. This prevents the loss of expertise and maintains the quality and integrity of the platform.",
        "example": "If a key developer leaves, their replacement can quickly get up to speed if there's comprehensive documentation and a system for knowledge transfer.",
    },
    {
        "id": 39,
        "type": "PeopleSocial",
        "stakeholder": "Organizers",
        "weight": 3,
        "text": "Has a project support community been created?",
        "justification": "Having a support community is still highly important. It fosters collaboration, user engagement, and can lead to community-driven development and troubleshooting.",
        "example": "A forum where users can discuss strategies, report bugs, and suggest features can greatly reduce the burden on the core development team and help prioritize tasks based on user feedback.",
    },
    {
        "id": 40,
        "type": "Process",
        "stakeholder": "Organizers",
        "weight": 4,
        "text": "Have you correctly described your data handling procedures?",
        "justification": "Data handling procedures are critical as they directly impact the quality of training data and subsequently affect the performance of the RL agent. Understanding how data is collected, preprocessed, and fed into the RL model is essential for ensuring the agent's effectiveness.",
        "example": "Ensuring that the data collection process is unbiased and that the replay buffer is managed effectively to prevent overfitting or underutilization of data.",
    },
    {
        "id": 41,
        "type": "Process",
        "stakeholder": "Organizers",
        "weight": 4,
        "text": "Have you correctly described your model development processes?",
        "justification": "Model development processes outline how the RL algorithm is designed and trained. This includes aspects such as the choice of algorithm, network architecture, hyperparameters, and training methodology. Understanding these processes is fundamental for reproducibility and ensuring the model's reliability and performance.",
        "example": "Documenting the transition from a model-free to a model-based approach, detailing the algorithms used, and the rationale behind choosing specific hyperparameters.",
    },
    {
        "id": 42,
        "type": "Process",
        "stakeholder": "Organizers",
        "weight": 4,
        "text": "Have you correctly described the deployment processes of your model?",
        "justification": "Deployment processes are crucial as they determine how the trained RL model is integrated into the game environment for real-world interaction. Understanding deployment procedures ensures smooth transition from development to production, minimizing potential errors and ensuring the model functions as intended in the game environment.",
        "example": "Describing the process of integrating the trained RL model into the live game environment, including any safety checks and performance monitoring systems.",
    },
    {
        "id": 43,
        "type": "Requirements",
        "stakeholder": "Organizers",
        "weight": 5,
        "text": "Have you thoroughly defined the objectives, scope, stakeholder needs, expectations, decision goals, and insights of the AI system to ensure alignment with business objectives and user expectations?",
        "justification": "Clearly defining the objectives, scope, stakeholder needs, and expectations is fundamental to the success of any AI system. If these aspects are not well-defined, it can lead to requirement debt, where the system does not meet the necessary criteria for success due to ambiguous or incomplete requirements.",
        "example": "If the competition platform's goal is not aligned with the stakeholders' expectations, it may result in a system that is technically sound but fails to engage users or meet business objectives.",
    },
    {
        "id": 44,
        "type": "Requirements",
        "stakeholder": "Organizers",
        "weight": 5,
        "text": "Have you thoroughly addressed the technical aspects of the AI system, including the selection of appropriate AI techniques, algorithms, and models to achieve desired functionality and performance, as well as specifying quality attributes, trade-offs, metrics, and indicators to measure and evaluate system performance effectively?",
        "justification": "Neglecting technical aspects such as AI techniques and models can result in a system that doesn't meet performance expectations, leading to requirement debt. Technical requirements are essential for system functionality.",
        "example": "Choosing an overly complex model for a simple game could result in longer training times and difficulty in interpreting the model's decisions, making it harder to debug and improve.",
    },
    {
        "id": 45,
        "type": "Requirements",
        "stakeholder": "Organizers & Participants",
        "weight": 4,
        "text": "Have you monitored and retrained the AI system with new data as needed?",
        "justification": "Continuously monitoring and retraining the AI system with new data is important for maintaining its relevance and performance, which can prevent the accumulation of technical debt due to model staleness or performance degradation.",
        "example": "In a game competition platform, if new strategies or game updates are introduced, the AI must be retrained to understand these changes. Failing to do so can result in a system that performs poorly and requires significant refactoring later on.",
    },
    {
        "id": 46,
        "type": "SelfAdmitted",
        "stakeholder": "Participants",
        "weight": 4,
        "text": "Have you addressed readability concerns in the RL model's code, such as poorly named variables, to improve maintainability?",
        "justification": "Readability of code improves maintainability, which is crucial for long-term development and debugging. However, this might not directly impact the RL model's performance.",
        "example": "Renaming variables from var1 to player_score to clarify their purpose.",
    },
    {
        "id": 47,
        "type": "SelfAdmitted",
        "stakeholder": "Participants",
        "weight": 4,
        "text": "Have you tackled code duplication in feature extraction code, ensuring efficiency and maintainability?",
        "justification": "Code duplication in feature extraction can affect both efficiency and maintainability, which are important aspects in RL applications.",
        "example": "Refactoring two similar functions for extracting player statistics into a single reusable function.",
    },
    {
        "id": 48,
        "type": "SelfAdmitted",
        "stakeholder": "Participants",
        "weight": 3,
        "text": "Have you minimized direct editing of ML model weights and layers to maintain model integrity and stability?",
        "justification": "Direct editing of model weights can lead to instability and unexpected behavior, making it crucial to minimize such actions.",
        "example": "Using version control to track changes in model architecture instead of manual tweaks.",
    },
    {
        "id": 49,
        "type": "SelfAdmitted",
        "stakeholder": "Participants",
        "weight": 4,
        "text": "Have you identified and addressed dependencies on external libraries or components that may hinder future changes?",
        "justification": "Dependencies on external libraries can impact the flexibility and maintainability of the system, thus requiring attention.",
        "example": "Documenting and containerizing the current environment to ensure reproducibility.",
    },
    {
        "id": 50,
        "type": "SelfAdmitted",
        "stakeholder": "Participants",
        "weight": 3,
        "text": "Have you identified and removed unnecessary or deprecated model code to streamline the system?",
        "justification": "Removing unnecessary or deprecated code improves maintainability and potentially performance by reducing complexity.",
        "example": "Deleting legacy features that have been replaced by more efficient algorithms.",
    },
    {
        "id": 51,
        "type": "SelfAdmitted",
        "stakeholder": "Organizers & Participants",
        "weight": 4,
        "text": "Have you standardized data representation within the source code and storage mechanisms?",
        "justification": "Standardizing data representation improves consistency and maintainability, which are important in RL development.",
        "example": "Ensuring all player data is stored in a uniform structure across the platform.",
    },
    {
        "id": 52,
        "type": "SelfAdmitted",
        "stakeholder": "Organizers",
        "weight": 4,
        "text": "Have you established clear boundaries between subsystems to facilitate maintenance and changes?",
        "justification": "Clear boundaries between subsystems improve maintainability and facilitate changes, which are important in complex RL systems.",
        "example": "Defining separate modules for the matchmaking system and the scoring system.",
    },
    {
        "id": 53,
        "type": "SelfAdmitted",
        "stakeholder": "Participants",
        "weight": 3,
        "text": "Have you designed the model code with maintenance and future modifications in mind?",
        "justification": "Designing the model code with maintenance and future modifications in mind is crucial for the long-term success of the RL system.",
        "example": "Building a flexible architecture that allows for the easy addition of new game modes.",
    },
    {
        "id": 54,
        "type": "SelfAdmitted",
        "stakeholder": "Participants",
        "weight": 3,
        "text": "Have you considered potential performance impacts of changes to the ML workflow?",
        "justification": "Considering performance impacts is crucial to ensure that changes to the ML workflow do not degrade system performance.",
        "example": "Monitoring the impact of a new feature extraction method on the overall system latency.",
    },
    {
        "id": 55,
        "type": "SelfAdmitted",
        "stakeholder": "Participants",
        "weight": 4,
        "text": "Have you implemented measures to ensure robustness of the RL model against variations in data quality?",
        "justification": "Ensuring robustness against variations in data quality is essential for the reliability of the RL model.",
        "example": "Implementing data validation checks to detect and handle anomalous input data.",
    },
    {
        "id": 56,
        "type": "Test",
        "stakeholder": "Participants",
        "weight": 5,
        "text": "Have all hyperparameters been correctly tuned, validated, and ensured to be optimal for performance in the game environment?",
        "justification": "Tuning hyperparameters directly affects the performance of the RL agent in the game environment. It's crucial for optimizing its behavior. Optimal hyperparameters are vital for the RL agent to effectively learn and adapt to the game dynamics. Correct hyperparameter tuning is essential in RL game applications to optimize the model's performance and enhance the gaming experience, ensuring efficient learning and effective decision-making in-game scenarios.",
        "example": "Tuning the learning rate can significantly affect the convergence speed and stability of the training process.",
    },
    {
        "id": 57,
        "type": "Test",
        "stakeholder": "Organizers & Participants",
        "weight": 4,
        "text": "Has reproducibility of agent training and environment dynamics been tested to ensure consistency?",
        "justification": "Reproducibility ensures consistency and reliability in training the agent, which is crucial for fair gameplay.",
        "example": "The use of fixed random seeds to ensure that results can be replicated across different runs.",
    },
    {
        "id": 58,
        "type": "Test",
        "stakeholder": "Organizers",
        "weight": 5,
        "text": "Is there a fully automated test regularly running to validate the entire pipeline, ensuring data and code move through each stage successfully and resulting in a well-performing model?",
        "justification": "Having a fully automated test ensures the integrity of the entire pipeline, which is essential for maintaining the quality of the game.",
        "example": "Automated regression tests can catch issues early before they affect the model's performance.",
    },
    {
        "id": 59,
        "type": "Test",
        "stakeholder": "Organizers & Participants",
        "weight": 3,
        "text": "Do the data invariants hold for the inputs in the game environment?",
        "justification": "Data invariants are important for maintaining the integrity of the game environment and ensuring fair gameplay.",
        "example": "Checking that the positions of players in a sports game do not suddenly jump to unrealistic values.",
    },
    {
        "id": 60,
        "type": "Test",
        "stakeholder": "Organizers & Participants",
        "weight": 4,
        "text": "Are there mechanisms in place to ensure that training and serving are not skewed in the game?",
        "justification": "Skewed training and serving can lead to unfair advantages or disadvantages for players.",
        "example": "Using the same feature engineering pipeline for both training and serving can help avoid discrepancies.",
    },
    {
        "id": 61,
        "type": "Test",
        "stakeholder": "Organizers & Participants",
        "weight": 5,
        "text": "Are the models numerically stable for effective gameplay?",
        "justification": "Numerically stable models ensure reliable and consistent behavior during gameplay.",
        "example": "The use of gradient clipping in training to prevent exploding gradients.",
    },
    {
        "id": 62,
        "type": "Test",
        "stakeholder": "Organizers & Participants",
        "weight": 5,
        "text": "Has the prediction quality of the game not regressed over time?",
        "justification": "Prediction quality directly impacts the agent's decisions and ultimately the gameplay experience. Therefore, maintaining its quality is crucial.",
        "example": "Tracking the accuracy of the model's predictions against a validation set over multiple seasons of a game.",
    },
    {
        "id": 63,
        "type": "Versioning",
        "stakeholder": "Organizers",
        "weight": 5,
        "text": "Have you installed a proper version control system for model, training and test data?",
        "justification": "Version control is crucial in any software development project, including RL game applications, to keep track of changes, revert to previous states if necessary, and collaborate effectively. Without version control, it can be challenging to manage changes, leading to potential errors and difficulties in reproducing results.",
        "example": "If a new model version causes a regression in performance, a version control system would allow developers to quickly revert to a previous, stable version.",
    },
    {
        "id": 64,
        "type": "Versioning",
        "stakeholder": "Organizers",
        "weight": 3,
        "text": "Have you used the appropriate policy for marking the versions of your software components?",
        "justification": "Proper versioning allows for clear communication about changes and updates to software components. It helps users understand the significance of updates (major, minor, or patch) and ensures compatibility across different versions. While essential, it may not directly impact the RL game's functionality as much as version control itself.",
        "example": "If a major update is released without proper version marking, it could break compatibility with existing systems that rely on the platform, leading to significant technical debt.",
    },
    {
        "id": 65,
        "type": "Versioning",
        "stakeholder": "Organizers & Participants",
        "weight": 4,
        "text": "Do you maintain a consistent data structure for game state representation throughout iterations, ensuring compatibility between different versions of the RL game?",
        "justification": "Ensuring consistency in the data structure for representing the game state is crucial in RL game development. Changes in the data structure could affect the performance of RL algorithms, training stability, and overall gameplay experience. Keeping track of these changes and ensuring compatibility between different versions of the game state representation can help maintain the integrity and effectiveness of the RL algorithms employed in the game.",
        "example": "If the game state representation changes without maintaining consistency, models trained on previous versions of the data may become obsolete, requiring retraining or adaptation.",
    },
    {
        "id": 66,
        "type": "Accessibility",
        "stakeholder": "Organizers",
        "weight": 5,
        "text": "Have you conducted usability testing to identify and address potential barriers in the platform setup process?",
        "justification": "Conducting usability testing is critical to uncover and address accessibility issues that can impede participants' engagement. By identifying these barriers early, organizers can make necessary adjustments to enhance the platform's usability and ensure a smooth user experience.",
        "example": "If usability testing reveals that participants struggle with the initial setup due to unclear instructions, organizers can simplify the process and provide more intuitive guidance, thereby reducing Accessibility Debt and improving participant retention.",
    },
    {
        "id": 67,
        "type": "Accessibility",
        "stakeholder": "Organizers",
        "weight": 4,
        "text": "Have you integrated adaptive user interfaces that personalize the setup experience based on participants' skill levels and preferences?",
        "justification": "Integrating adaptive user interfaces can significantly enhance usability by tailoring the setup process to individual participants' needs. This personalized approach can reduce frustration and improve engagement by providing relevant guidance and support based on users' varying levels of expertise.",
        "example": "If a beginner is guided through a simplified setup process with additional tips and resources, while an advanced user is offered a streamlined version, both users are more likely to have a positive experience and continue their participation without unnecessary obstacles.",
    },
    {
        "id": 68,
        "type": "Accessibility",
        "stakeholder": "Organizers",
        "weight": 3,
        "text": "Have you implemented feedback mechanisms for participants to report accessibility issues and suggest improvements?",
        "justification": "Implementing feedback mechanisms allows organizers to continuously improve the platform based on user input. By actively listening to participants' concerns and suggestions, organizers can promptly address accessibility issues and enhance the overall user experience.",
        "example": "If participants can easily report setup difficulties or suggest enhancements, organizers can quickly implement changes, thereby minimizing Accessibility Debt and fostering a more user-friendly environment.",
    },
]

DESCRIPTORS = [
    {
        "type": "Accessibility",
        "definition": "Accessibility Debt refers to the barriers that participants encounter due to the lack of immediate usability of platform technologies.",
        "problem": "The primary issue with Accessibility Debt is that it can dissuade potential participants from engaging with AI/ML competition platforms. This is due to the challenges they face in utilizing the platform's components quickly and efficiently. If these barriers are not addressed, the competitive value and attractiveness of such platforms diminish, leading to decreased participation and devalued competitions.",
        "example": "Consider an AI-based competition platform where participants must navigate a complex setup process before they can begin working on their assigned tasks. If the process involves multiple steps, unclear instructions, or requires significant troubleshooting, participants may become frustrated and disengaged. This scenario exemplifies Accessibility Debt, as the immediate usability of the platform is compromised, hindering participant involvement and satisfaction.",
    },
    {
        "type": "Algorithm",
        "definition": "Algorithm debt refers to technical debt arising from the choice, implementation, and maintenance of algorithms within AI systems, excluding issues directly related to the model's structure or data handling. This debt encompasses challenges associated with selecting appropriate algorithms, optimizing their performance, and ensuring they remain suitable as the system scales or as requirements evolves.",
        "problem": "The problem of algorithm debt in AI-based systems often stems from the use of algorithms that are either too simplistic or overly complex for the task at hand, poorly optimized, or inefficient in terms of computational resources. Such choices may initially simplify development but can lead to increased costs and reduced system performance in the long run. For instance, an algorithm that is not scalable might handle initial data volumes well but becomes a bottleneck as data grows, requiring costly re-engineering efforts.",
        "example": "In the context of AI-based competition platforms, an example of algorithm debt could occur when an algorithm designed for matchmaking in online games does not effectively adapt to changes in player skills and behaviors over time. Initially, the algorithm may work well, but as the variety of players increases, its inability to adapt could result in poor matchmaking, increased wait times, and player dissatisfaction. The platform may then face significant technical debt as the original algorithm requires substantial modification or replacement to meet the evolved needs of its user base. This example highlights how crucial it is to anticipate the long-term needs of the system when choosing algorithms, and to plan for their evolution as part of the platform's ongoing development strategy to avoid accruing algorithm debt. This example illustrates how the need for rapid development in competitive AI platforms can lead to significant algorithm debt, impacting the platform's long-term capability to perform reliably and accurately.",
    },
    {
        "type": "ArchitecturalDesign",
        "definition": "Architectural debt refers to the complexities arising from the intricate integration of architectural components with their foundational data within AI-based systems.",
        "problem": "This type of debt can precipitate intricate and indeterminate dependencies between system components and their corresponding datasets. It often results in architectures that are challenging to evaluate due to their complex compositions. Moreover, it can lead to the emergence of undeclared entities that utilize AI models, further complicating the governance and maintenance of these systems.",
        "example": "At a global AI-based game development competition, architectural debt in gaming platforms posed significant challenges. The systems were designed to adapt dynamically to user behaviors using complex architectures that integrated multiple data sources and AI components. This complexity led to unpredictable game behaviors, where player input changes unexpectedly altered AI responses due to hidden architectural dependencies. Additionally, undocumented consumption of extra data by some components caused inconsistencies and performance issues, complicating the assessment and modification of games by developers. This severely impacted the competition experience and the performance of AI models, highlighting how architectural debt can undermine functionality and innovation in AI-driven competitions.",
    },
    {
        "type": "Build",
        "definition": "Build debt encompasses the suboptimal dependencies within and between AI models, both internal and external. This refers to the reliance on inefficient or obsolete components and processes in the development and deployment of AI systems.",
        "problem": "This type of debt becomes apparent through the implementation of inefficient building processes and the continued use of outdated dependencies. These practices can lead to reduced system efficiency and performance, increased maintenance costs, and hindered scalability. Ultimately, build debt can compromise the robustness and responsiveness of AI systems, affecting their ability to adapt to new requirements or integrate with modern technologies.",
        "example": "In an AI-based game competition, a team's performance was significantly hampered by build debt. Their AI model relied on several outdated machine learning libraries and deprecated data processing frameworks, which had not been updated due to build debt. During the competition, this resulted in slower response times and subpar decision-making by the AI, particularly when compared to competitors using more modern and efficient technologies. The team's reliance on these outdated dependencies not only diminished the AI's effectiveness but also showcased the critical need for continuous updates and integration of current technologies to maintain competitiveness in rapidly evolving environments.",
    },
    {
        "type": "Code",
        "definition": "Code debt characterizes the less-than-ideal coding practices frequently observed in the development of AI models, which often stem from the experimental nature inherent to AI research and development.",
        "problem": "This type of debt is evident in several critical areas. For instance, AI-based systems may contain residual experimental code that is ineffectively integrated into the production environment. Moreover, the transition from experimental models to fully deployable software often lacks optimal refactoring, leading to inefficiencies. The algorithmic complexity of AI models can also introduce additional code deficiencies that undermine the system's robustness and efficiency.",
        "example": "An AI game competition was organized where different AI systems competed in a classic game of chess. Each AI participant was designed to think several moves ahead and adapt to their opponent's strategies. The competition served to highlight the strengths and weaknesses of each AI's decision-making abilities. It provided a straightforward environment to observe how well each AI could handle complex decision trees and react to unexpected moves. This event also helped developers identify areas where their AI models could be improved, especially focusing on minimizing code debt by refining the algorithms for better performance and reliability in real-time decisions.",
    },
    {
        "type": "Configuration",
        "definition": "Configuration debt encapsulates the deficiencies prevalent within the configuration frameworks of AI-based systems. This term specifically refers to the complexities and shortcomings of configuration processes, including the use of convoluted, insufficiently documented, unversioned, or untested configuration files.",
        "problem": "Configuration debt introduces significant vulnerabilities to machine learning systems by fostering errors in configuration that can deplete valuable time and computational resources and cause delays in production. This debt hampers the ability to accurately modify and understand configurations, complicating the evaluation of the effects of changes and the comparison of configurations across different iterations. Moreover, poor management of configuration settings intensifies these issues by obstructing the precise specification, tracking, and reproducibility of configuration alterations. This results in difficulties in replicating experiments and ensuring system reliability. Effective management of configuration settings is crucial to alleviate these problems and enhance the efficiency, reproducibility, maintainability, and transparency of AI-based systems.",
        "example": "During a high-profile AI-based game competition, one team struggled with significant configuration debt. Their gaming AI had multiple configuration files that were complex and poorly documented, making it difficult for new team members to understand and modify the settings efficiently. As the competition progressed, the need to adapt to opponents' strategies became critical. However, due to unversioned and untested configurations, changes made under pressure led to errors that were not detected until too late. This resulted in the AI performing unpredictably, costing the team crucial matches and demonstrating the impact of configuration debt on competitiveness and system reliability.",
    },
    {
        "type": "Data",
        "definition": "Data debt pertains to the shortcomings in the collection, management, and application of data within AI-based systems, characterized by issues such as poor data quality, unregulated data dependencies, and inadequate data relevance.",
        "problem": "These deficiencies can compromise the efficiency and precision of AI models, posing challenges to the system's reliability and future adaptability. Data debt introduces risks that may impede the ongoing development and operational effectiveness of AI systems, potentially leading to erroneous outputs and strategic misalignments in long-term system evolution.",
        "example": "In a high-profile AI-based gaming competition, a team faced setbacks from data debt. Their AI model, designed to dynamically adapt strategies, used outdated and poorly curated datasets, compromising data relevance and quality. This affected the model's decision-making, often resulting in ineffective strategies and failure to anticipate opponent moves. Unmanaged data dependencies, only discovered during the competition, highlighted the need for real-time data processing and underscored the importance of rigorous data management to maintain AI effectiveness and system scalability in dynamic settings.",
    },
    {
        "type": "Defect",
        "definition": "Defect debt describes the phenomenon where code exhibits unexpected behavior, compelling developers to defer its rectification owing to the complexity of the repairs or constraints on time.",
        "problem": "This type of debt embodies unresolved anomalies or bugs within a software system. Encountering code that does not perform as anticipated, developers might opt to postpone necessary fixes due to the repair's intricacy or pressing deadlines. Such decisions contribute to the accumulation of technical debt, characterized by persisting known issues which may lead to further bugs and erratic software behavior. Over time, if the focus remains on adding new features rather than addressing existing defects, or if resolution efforts are hindered by resource limitations, defect debt may escalate significantly.",
        "example": "During an AI-based game competition, a team encountered significant challenges due to defect debt. Their AI system, crucial for decision-making in the game, had a known bug that caused it to misinterpret game rules under specific conditions. Despite awareness of the issue, the team had previously postponed fixing the bug due to its complexity and the looming competition deadline. As a result, during a critical match, the AI behaved unpredictably, leading to a crucial loss. This incident highlighted the risks of accumulating defect debt, especially when enhancements are prioritized over essential maintenance and bug resolution in competitive environments.",
    },
    {
        "type": "Documentation",
        "definition": "Documentation debt refers to the gaps or inadequacies in the documentation associated with AI-based systems. This includes the lack of comprehensive documentation covering system features and the assumptions underlying the data utilized in these systems.",
        "problem": "The absence or insufficiency of detailed documentation complicates the understanding and maintenance of AI systems over time. This deficit can obstruct effective knowledge transfer, hinder system scalability, and increase the likelihood of errors during updates or when integrating new components, ultimately impacting the long-term sustainability and operability of the system.",
        "example": "During an AI-based game competition, teams noticed issues stemming from documentation debt. The AI systems deployed lacked detailed documentation on their decision-making processes and data assumptions. This led to confusion among the developers when their AIs behaved unpredictably or failed to adapt to game dynamics effectively. Teams struggled to diagnose problems or make timely adjustments, as the necessary information was either missing or unclear. This situation underscored the critical need for thorough documentation to ensure that AI systems are fully understood and can be efficiently managed and improved over time, especially in competitive scenarios.",
    },
    {
        "type": "Ethics",
        "definition": "Ethics debt refers to the shortcomings concerning the ethical dimensions of AI-based systems, including issues such as algorithmic fairness, prevalent prediction biases, and a lack of transparency and accountability.",
        "problem": "The realm of AI ethics encounters multiple challenges that stem from a diminished influence over decision-making processes, insufficient enforcement mechanisms, and an over-reliance on ethical guidelines rather than binding legal standards. This often results in the neglect of broader social contexts and relationships, contributing to a lack of diversity within the AI community and the exclusion of vital ethical considerations. The ramifications of ethics debt are manifold, encompassing unintended harmful effects and the malicious use of AI technologies. Such consequences include job displacement, unsupervised experimental applications, and significant data breaches. Moreover, there exists a substantial risk of developing biased algorithms and unsafe products, precipitously deploying immature applications, and the potential exploitation of AI technologies by malicious entities, such as criminal hackers.",
        "example": "In an AI-based game competition, a team deployed an AI model designed to predict and counter opponents' moves. Unfortunately, the model exhibited significant ethics debt due to overlooked issues like algorithmic fairness and transparency. The model, trained predominantly on data from games played by a non-diverse group, failed to fairly assess strategies used by a wider range of competitors. This bias led to inaccurate predictions and strategic blunders, compromising the team's performance. The incident highlighted the consequences of neglecting ethical considerations in AI development, demonstrating how ethics debt can undermine fairness and effectiveness in competitive environments.",
    },
    {
        "type": "Infrastructure",
        "definition": "Infrastructure debt encapsulates the inadequacies inherent in the implementation and operational management of artificial intelligence (AI) pipelines and models.",
        "problem": "This type of debt introduces significant operational and reproducibility challenges within AI systems. It frequently manifests as overly complex infrastructures that integrate multiple AI pipelines, leading to suboptimal resource distribution for the training and testing of AI models. Additionally, it exacerbates the difficulty in effectively monitoring and debugging AI systems, thereby compromising their reliability and performance.",
        "example": "During a high-profile AI-based game competition, infrastructure debt became evident as teams struggled with the systems set up for training and testing their game-playing models. The competition's infrastructure was initially designed to handle multiple concurrent AI pipelines efficiently. However, as the competition progressed, it became clear that there were significant deficiencies in resource allocation and system integration. Some teams experienced delays in model training due to limited GPU resources, while others faced challenges in consistently reproducing game strategies due to varying system performances. Additionally, the lack of robust monitoring and debugging tools meant that identifying and resolving these issues was time-consuming, leading to uneven playing fields and questioning the fairness and integrity of the competition. This scenario highlights how infrastructure debt can severely impact the operational success of AI-driven initiatives in competitive environments.",
    },
    {
        "type": "Model",
        "definition": "Model debt refers to the accumulation of suboptimal practices within the lifecycle of artificial intelligence models, encompassing the design, training, and management phases. This encompasses issues related to inadequate feature selection, improper tuning of hyperparameters, and ineffective strategies for model deployment.",
        "problem": "Model debt manifests through several challenges, such as poorly chosen features, neglected adjustments of hyperparameters, and deficient deployment architectures. Such deficits may complicate the maintenance of models and diminish their predictive accuracy, thereby undermining the system's overall effectiveness and reliability.",
        "example": "In an AI-based game competition, one team faced significant model debt issues. Their AI model, initially promising, suffered from too narrow feature selection focused on short-term gains and lacked strategic depth. Additionally, the hyperparameters were not tuned to the game's dynamic nature, and the deployment strategy failed to adapt to evolving scenarios. These shortcomings led to the model underperforming in critical matches, unable to accurately predict or counter the diverse strategies of competitors.",
    },
    {
        "type": "PeopleSocial",
        "definition": "People debt signifies the shortcomings associated with the expertise and capabilities of individuals engaged in the development and maintenance of AI-based systems. This category also encompasses the interpersonal and interdepartmental challenges, particularly between data scientists and software engineers, which can hinder the effective collaboration necessary for constructing robust AI-enabled systems.",
        "problem": "Such deficiencies may impede the comprehensive understanding and adept handling of AI technologies among team members, fostering suboptimal development practices. Notably, this form of debt manifests as ambiguous role delineations, misaligned practices and expectations, communication barriers, and clashes over technical competencies, all of which can significantly disrupt project progress and quality.",
        "example": "In an AI-based game competition, a team encountered significant challenges due to people debt. The team, comprised of data scientists and software engineers, struggled with unclear roles and poor communication, which led to inefficiencies in integrating AI strategies into the gaming software. As the competition progressed, these issues became apparent when their AI consistently misinterpreted game rules or reacted inappropriately to opponent moves. The lack of cohesive expertise and collaboration not only reduced the AI's competitiveness but also highlighted the critical impact of team dynamics on the development and performance of AI systems in high-stakes environments.",
    },
    {
        "type": "Process",
        "definition": "Process debt in AI-based systems, as an extension of general software systems, includes inefficiencies in development, deployment, or maintenance, covering data collection, preprocessing, training, evaluation, deployment, monitoring, and iteration.",
        "problem": "Arising from suboptimal practices or shortcuts in the AI development lifecycle, such as inadequate data preprocessing, poor model evaluation, manual error-prone deployment, insufficient monitoring, and delayed updates, process debt compromises model accuracy, amplifies technical debt, inflates costs, and complicates maintenance and evolution of AI systems.",
        "example": "In an AI-based game competition, process debt became evident when developers, pressed for time, opted for rapid yet suboptimal methods. The game, designed to evolve based on player interactions, initially performed well. However, the team skipped critical steps in data preprocessing and deployed the AI models manually without thorough testing. As the competition progressed, the lack of robust evaluation and monitoring meant that the AI did not adapt effectively to player strategies or update with new data. This resulted in increasingly predictable and exploitable AI behavior, reducing the game's challenge and appeal. The initial shortcuts led to higher operational costs and technical challenges, as the team struggled to refine and maintain the system. The process debt accumulated not only detracted from the player experience but also constrained the game's ability to evolve, demanding significant rework to address these foundational issues.",
    },
    {
        "type": "Requirements",
        "definition": "Requirements debt pertains to the inadequacies in the articulation and management of system requirements essential for the effective development and progressive refinement of AI-based systems.",
        "problem": "This type of debt emerges when system requirements are ambiguous or insufficiently specified, complicating the accurate identification and fulfillment of stakeholder expectations. Such deficiencies can hinder the development process, leading to a system design and implementation that may not fully align with the intended functionalities or performance criteria, thereby affecting the overall efficacy and utility of the system.",
        "example": "In a recent AI-based game competition, a team experienced significant setbacks due to requirements debt. Initially, the AI system was designed without a clear understanding of the competition's complex scoring rules and diverse gameplay scenarios. As a result, the AI struggled to adapt its strategies effectively during the matches. This misalignment between the AI's capabilities and the actual game requirements led to underperformance against competitors whose systems were better tailored to the specific demands of the competition. This example illustrates how poorly defined requirements can severely limit the effectiveness and adaptability of AI systems in dynamic environments.",
    },
    {
        "type": "SelfAdmitted",
        "definition": "Self-Admitted Technical Debt (SATD) comprises design and implementation choices recognized by developers as suboptimal during the software development process. These decisions are explicitly acknowledged within code comments, which identify aspects of the project needing further refinement or completion in the future.",
        "problem": "SATD represents a specific category of technical debt that is both visible and quantifiable, distinctly articulated through annotations in the source code. This type of debt includes substandard development practices, incomplete documentation, acknowledged bugs, and deficiencies in code, testing, or software requirements. If not promptly addressed, SATD can substantially degrade the quality and maintainability of software, emphasizing its critical role in the development lifecycle.",
        "example": "During an international AI-based game competition, a development team used an AI model that was laden with Self-Admitted Technical Debt (SATD). The developers had noted in the code comments that certain algorithms were hastily implemented and needed optimization. As the competition progressed, the AI model began to exhibit erratic behaviors, particularly in handling unexpected strategies from opponents. This was primarily due to the acknowledged but unaddressed inefficiencies in the model's decision-making algorithms. The team's failure to resolve these issues before the competition led to poor performance and demonstrated how SATD could critically undermine the functionality and success of AI systems in real-time competitive scenarios.",
    },
    {
        "type": "Test",
        "definition": "Test debt encompasses the shortcomings in testing practices within AI systems, particularly highlighting the insufficient testing of AI models and pipelines, as well as a deficiency in advanced testing methodologies necessary for evaluating data quality and distribution.",
        "problem": "The probabilistic characteristics of certain AI algorithms add a layer of complexity to the testing processes. These complexities make it especially challenging to ensure comprehensive testing coverage and reliability, thereby increasing the risk of undetected issues in AI system behavior under varied operational conditions. This type of debt may lead to less predictable and potentially unreliable AI system performance.",
        "example": "In an AI-based game competition, various AI models were pitted against each other in a strategy game. However, due to existing test debt, the competition faced challenges. The AIs had not been adequately tested for their ability to handle the stochastic elements of the game, such as random events and unpredictable opponent strategies. This lack of rigorous testing resulted in some AI models performing inconsistently, displaying erratic behavior, or failing to adapt to new scenarios presented during the competition. The event highlighted critical gaps in testing practices, emphasizing the need for more robust testing frameworks to ensure AI reliability and effectiveness in dynamic environments.",
    },
    {
        "type": "Versioning",
        "definition": "Versioning debt refers to the substandard practices associated with the versioning of AI models and their corresponding training and testing datasets. This includes insufficient version control systems or the absence of robust versioning mechanisms.",
        "problem": "Such inadequacies complicate the tracking and management of different iterations of models and datasets, which is essential for the orderly evolution of AI systems. Furthermore, the lack of effective versioning undermines the reproducibility of the system, presenting challenges in validating outcomes and replicating previous states, thereby affecting the reliability and scientific integrity of the AI system development process.",
        "example": "During an AI-based game competition, one team faced challenges stemming from versioning debt. They had multiple versions of their AI model, each trained with slightly different datasets, but poor version control practices made it difficult to identify which version was most current or effective. This confusion led to deploying an outdated model that underperformed during the competition. The inability to track and manage model versions not only hindered the team's performance but also showcased the critical importance of robust versioning systems in maintaining the reliability and competitiveness of AI systems in dynamic and competitive settings.",
    },
]
